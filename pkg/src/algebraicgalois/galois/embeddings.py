# src/algebraicgalois/galois/embeddings.py
"""
Relative Galois extensions L/K inside an ambient, and K-embeddings between them.

L = N^H and K = N^H' for H normal in H'; the relative group H'/H is handled
through one representative (the least index) per coset.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from ..algebra.number_field import FieldMap, NFElement
from ..algebra.parsing import format_polynomial
from ..algebra.polynomial import Polynomial
from ..core.errors import AmbientMismatch, NoEmbedding, NotAnEmbedding
from .ambient import AmbientGaloisField, AmbientMap, identity_map
from .fixed_fields import FixedFieldBasis, fixed_field
from .subgroups import Subgroup, root_stabilizer

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GaloisSubextension:
    """The Galois extension N^inner over N^outer, with group outer/inner."""

    inner: Subgroup
    outer: Subgroup

    def __post_init__(self):
        if not self.inner.is_normal_in(self.outer):
            raise ValueError("inner subgroup must be a normal subgroup of the outer subgroup")

    @classmethod
    def over_rationals(cls, inner: Subgroup) -> "GaloisSubextension":
        return cls(inner, Subgroup.whole(inner.ambient))

    @classmethod
    def full(cls, ambient: AmbientGaloisField) -> "GaloisSubextension":
        return cls(Subgroup.trivial(ambient), Subgroup.whole(ambient))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaloisSubextension):
            return NotImplemented
        return self.inner == other.inner and self.outer == other.outer

    def __hash__(self) -> int:
        return hash((self.inner.members, self.outer.members))

    def __repr__(self) -> str:
        return f"GaloisSubextension(degree={self.degree}, inner={list(self.inner.members)}, outer={list(self.outer.members)})"

    @property
    def ambient(self) -> AmbientGaloisField:
        return self.inner.ambient

    @cached_property
    def top(self) -> FixedFieldBasis:
        """L."""
        return fixed_field(self.inner)

    @cached_property
    def base(self) -> FixedFieldBasis:
        """K."""
        return fixed_field(self.outer)

    def is_over_rationals(self) -> bool:
        return self.outer.order == self.ambient.order

    # ------------------------------------------------------------------ relative group

    @cached_property
    def cosets(self) -> List[Tuple[int, ...]]:
        return self.inner.left_cosets(self.outer)

    @cached_property
    def coset_reps(self) -> Tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)

    @cached_property
    def _coset_of(self) -> Dict[int, int]:
        return {g: idx for idx, coset in enumerate(self.cosets) for g in coset}

    @property
    def degree(self) -> int:
        return len(self.coset_reps)

    identity = 0

    def quotient_index(self, g: int) -> int:
        """Image of an element of the outer subgroup in the relative group."""
        try:
            return self._coset_of[g]
        except KeyError:
            raise NotAnEmbedding("automorphism does not fix the base field")

    @cached_property
    def table(self) -> Tuple[Tuple[int, ...], ...]:
        t = self.ambient.table
        reps = self.coset_reps
        return tuple(tuple(self._coset_of[t[a][b]] for b in reps) for a in reps)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> Tuple[int, ...]:
        return tuple(row.index(self.identity) for row in self.table)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conjugate(self, a: int, b: int) -> int:
        """``a b a^-1`` in the relative group."""
        return self.table[self.table[a][b]][self.inverses[a]]

    def act(self, a: int, x: NFElement) -> NFElement:
        """Relative group element ``a`` applied to ``x`` in L."""
        return self.ambient.apply(self.coset_reps[a], x)

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        images = sorted({self._coset_of[g] for g in self.outer.generators} - {self.identity})
        return tuple(images)

    @cached_property
    def conjugacy_classes(self) -> List[Tuple[int, ...]]:
        seen = set()
        classes = []
        for b in range(self.degree):
            if b in seen:
                continue
            cls = tuple(sorted({self.conjugate(a, b) for a in range(self.degree)}))
            seen.update(cls)
            classes.append(cls)
        return classes

    def class_of(self, a: int) -> int:
        for idx, cls in enumerate(self.conjugacy_classes):
            if a in cls:
                return idx
        raise ValueError(f"{a} is not an element of the relative group")

    @cached_property
    def center(self) -> Tuple[int, ...]:
        return tuple(
            z for z in range(self.degree) if all(self.table[z][g] == self.table[g][z] for g in range(self.degree))
        )

    def is_abelian(self) -> bool:
        return len(self.center) == self.degree

    def element_order(self, a: int) -> int:
        k, current = 1, a
        while current != self.identity:
            current = self.table[current][a]
            k += 1
        return k

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "inner": self.inner.to_json(),
            "outer": self.outer.to_json(),
            "coset_reps": list(self.coset_reps),
            "top_degree": self.top.degree,
            "base_degree": self.base.degree,
        }


def subfield_subgroup(ambient: AmbientGaloisField, g: Polynomial) -> Subgroup:
    """Stabilizer of the least root of ``g`` in N, i.e. the subgroup fixing Q(root)."""
    roots = ambient.roots_of(g)
    if not roots:
        raise NoEmbedding(f"{format_polynomial(g)} has no root in the ambient field")
    try:
        k = ambient.polynomial_index(g)
        return root_stabilizer(ambient, k, 0)
    except AmbientMismatch:
        r = roots[0]
        return Subgroup(ambient, tuple(i for i in range(ambient.order) if ambient.apply(i, r) == r))


def lift_subextension(amap: AmbientMap, extension: GaloisSubextension) -> GaloisSubextension:
    """The same extension seen inside the target ambient: preimages under the projection."""
    inner = set(extension.inner.members)
    outer = set(extension.outer.members)
    target = amap.target
    return GaloisSubextension(
        Subgroup(target, tuple(j for j, i in enumerate(amap.projection) if i in inner)),
        Subgroup(target, tuple(j for j, i in enumerate(amap.projection) if i in outer)),
    )


@dataclass(frozen=True, eq=False)
class FieldEmbedding:
    """
    A K-embedding of L (from ``source``) into the ambient ``target``, given by the
    image of L's primitive element. ``base_map`` identifies K with its copy in the
    target; ``None`` means K = Q.
    """

    source: GaloisSubextension
    target: AmbientGaloisField
    image: NFElement
    base_map: Optional[AmbientMap] = None

    @cached_property
    def _map(self) -> FieldMap:
        return FieldMap(self.source.top.abstract_field, self.target.field, self.image)

    def __call__(self, a: NFElement) -> NFElement:
        return self._map(self.source.top.to_abstract(a))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldEmbedding):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def is_homomorphism(self) -> bool:
        return not self.source.top.minimal_polynomial.evaluate(self.image)

    def fixes_base(self) -> bool:
        kappa = self.source.base.primitive
        if self.base_map is not None:
            return self(kappa) == self.base_map(kappa)
        if not kappa.is_rational():
            return False
        return self(kappa) == self.target.field.rational(kappa.rational_value())

    def image_of_base(self) -> NFElement:
        return self(self.source.base.primitive)

    @cached_property
    def _relative_images(self) -> Dict[NFElement, int]:
        z = self.source.top.primitive
        return {self(self.source.act(a, z)): a for a in range(self.source.degree)}

    def to_json(self) -> dict:
        return {"image": self.image.to_json(), "source_degree": self.source.top.degree}


def restrict_automorphism(tau: int, phi: FieldEmbedding) -> int:
    """
    The unique element ``s`` of Gal(L1/K) with ``phi ∘ s = tau ∘ phi`` on L1, as an
    index into the relative group of ``phi.source``.
    """
    if not phi.fixes_base():
        raise NotAnEmbedding("embedding does not fix the base field")
    target = phi.target
    kappa = phi.image_of_base()
    if target.apply(tau, kappa) != kappa:
        raise NotAnEmbedding("automorphism does not fix the base field")
    moved = target.apply(tau, phi.image)
    try:
        return phi._relative_images[moved]
    except KeyError:
        raise NotAnEmbedding("automorphism does not preserve the embedded field")


def embeddings(
    source: GaloisSubextension, target: AmbientGaloisField, base_map: Optional[AmbientMap] = None
) -> List[FieldEmbedding]:
    """
    All K-embeddings of L = top(source) into ``target``, sorted by image.

    Inside one ambient (or through ``base_map``) they are ``tau ∘ iota`` for the
    target automorphisms ``tau`` that fix the image of K. Without a map only K = Q
    is supported and the roots of L's minimal polynomial are used.
    """
    if base_map is None and target == source.ambient:
        base_map = identity_map(target)
    z = source.top.primitive
    if base_map is not None:
        if base_map.source != source.ambient or base_map.target != target:
            raise AmbientMismatch("base map does not connect the source and target ambients")
        outer = set(source.outer.members)
        start = base_map(z)
        images = {target.apply(j, start) for j in range(target.order) if base_map.projection[j] in outer}
    else:
        if not source.is_over_rationals():
            raise AmbientMismatch("embeddings over a base field other than Q need an ambient map")
        from ..algebra.factorization import roots_in_field

        images = set(roots_in_field(source.top.minimal_polynomial, target.field))
    if not images:
        raise NoEmbedding(
            "minimal polynomial of the source field has no root in the target",
            {"minimal_polynomial": format_polynomial(source.top.minimal_polynomial)},
        )
    out = [FieldEmbedding(source, target, y, base_map) for y in sorted(images, key=lambda a: a.sort_key())]
    logger.debug(f"Found {len(out)} embeddings of a degree-{source.top.degree} field")
    return out


def identity_embedding(extension: GaloisSubextension) -> FieldEmbedding:
    ambient = extension.ambient
    return FieldEmbedding(extension, ambient, extension.top.primitive, identity_map(ambient))
