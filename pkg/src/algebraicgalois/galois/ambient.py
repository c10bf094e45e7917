# src/algebraicgalois/galois/ambient.py
"""
Ambient Galois number fields: splitting fields over Q with their automorphism
groups, and the maps between ambients used to build towers.

Every other object in the package (subfields, relative extensions, coordinate
rings, motives) lives inside one of these.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

from ..algebra.factorization import factor_over_nf, factor_over_q, polynomial_key, roots_in_field, shifted_root_matrix
from ..algebra.linalg import charpoly, inverse, mat_vec
from ..algebra.number_field import FieldMap, NFElement, NumberField, integralize
from ..algebra.parsing import format_polynomial, input_degree_limit
from ..algebra.polynomial import Polynomial, discriminant
from ..core.errors import AmbientMismatch, DegreeCapExceeded, NotAnEmbedding, VerificationFailed

logger = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 24


def canonical_polynomials(polys: Iterable[Polynomial]) -> Tuple[Polynomial, ...]:
    """Monic squarefree parts of the nonconstant inputs, deduplicated and sorted."""
    seen = {}
    for f in polys:
        if f.degree < 1:
            logger.debug(f"Ignoring constant polynomial {format_polynomial(f)}")
            continue
        g = f.squarefree_part()
        seen[g] = g
    return tuple(sorted(seen.values(), key=polynomial_key))


@dataclass(frozen=True, eq=False)
class AmbientGaloisField:
    """
    A Galois number field N/Q with its full automorphism group.

    ``autos[i]`` is the image of the generator under automorphism ``i``; index 0 is
    the identity and the rest follow the lexicographic order of the image
    coordinates. ``table[i][j]`` is the index of ``autos[i] ∘ autos[j]``.
    ``roots[k]`` lists the roots of ``polys[k]`` in N, sorted by coordinates.
    ``primitive_expression`` writes the generator as ``sum(w * roots[k][r])``.
    """

    polys: Tuple[Polynomial, ...]
    field: NumberField
    autos: Tuple[NFElement, ...]
    table: Tuple[Tuple[int, ...], ...]
    roots: Tuple[Tuple[NFElement, ...], ...]
    primitive_expression: Tuple[Tuple[int, int, int], ...] = ()

    identity_index = 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, AmbientGaloisField):
            return NotImplemented
        return self is other or (self.field == other.field and self.autos == other.autos)

    def __hash__(self) -> int:
        return hash(self.field)

    def __repr__(self) -> str:
        polys = ", ".join(format_polynomial(f) for f in self.polys)
        return f"AmbientGaloisField(degree={self.degree}, polys=[{polys}])"

    @property
    def degree(self) -> int:
        return self.field.degree

    @property
    def order(self) -> int:
        return len(self.autos)

    @property
    def generator(self) -> NFElement:
        return self.field.generator

    # ------------------------------------------------------------------ automorphisms

    @cached_property
    def maps(self) -> Tuple[FieldMap, ...]:
        return tuple(FieldMap(self.field, self.field, image) for image in self.autos)

    def apply(self, index: int, a: NFElement) -> NFElement:
        return self.maps[index](a)

    @cached_property
    def _index_by_image(self) -> Dict[NFElement, int]:
        return {image: i for i, image in enumerate(self.autos)}

    def index_of(self, image: NFElement) -> int:
        try:
            return self._index_by_image[image]
        except KeyError:
            raise NotAnEmbedding("element is not the image of the generator under an automorphism")

    def compose(self, i: int, j: int) -> int:
        return self.table[i][j]

    @cached_property
    def inverses(self) -> Tuple[int, ...]:
        out = [0] * self.order
        for i, row in enumerate(self.table):
            out[i] = row.index(self.identity_index)
        return tuple(out)

    def inverse(self, i: int) -> int:
        return self.inverses[i]

    def conjugate(self, g: int, h: int) -> int:
        """``g h g^-1``."""
        return self.table[self.table[g][h]][self.inverses[g]]

    @cached_property
    def rational_matrices(self) -> Tuple[List[List[Fraction]], ...]:
        """Q-matrices (rows) of each automorphism in the power basis of N."""
        out = []
        basis = self.field.power_basis()
        for fmap in self.maps:
            columns = [fmap(b).coords for b in basis]
            out.append([[columns[j][i] for j in range(self.degree)] for i in range(self.degree)])
        return tuple(out)

    # ------------------------------------------------------------------ roots

    @cached_property
    def root_permutations(self) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
        """``root_permutations[i][k][r]``: index of ``autos[i](roots[k][r])`` in ``roots[k]``."""
        lookups = [{r: idx for idx, r in enumerate(rs)} for rs in self.roots]
        out = []
        for fmap in self.maps:
            out.append(tuple(tuple(lookups[k][fmap(r)] for r in rs) for k, rs in enumerate(self.roots)))
        return tuple(out)

    def polynomial_index(self, f: Polynomial) -> int:
        g = f.squarefree_part()
        for k, p in enumerate(self.polys):
            if p == g:
                return k
        raise AmbientMismatch(
            f"{format_polynomial(f)} is not a defining polynomial of this ambient",
            {"polys": [format_polynomial(p) for p in self.polys]},
        )

    def cycle_type(self, index: int, k: int) -> List[int]:
        """Cycle lengths (sorted) of automorphism ``index`` on the roots of ``polys[k]``."""
        perm = self.root_permutations[index][k]
        seen = [False] * len(perm)
        lengths = []
        for start in range(len(perm)):
            if seen[start]:
                continue
            length = 0
            r = start
            while not seen[r]:
                seen[r] = True
                r = perm[r]
                length += 1
            lengths.append(length)
        return sorted(lengths)

    def root_orbits(self, k: int) -> List[Tuple[int, ...]]:
        """Orbits of the group on the roots of ``polys[k]``, as sorted root indices."""
        seen = set()
        orbits = []
        for r in range(len(self.roots[k])):
            if r in seen:
                continue
            orbit = tuple(sorted({perms[k][r] for perms in self.root_permutations}))
            seen.update(orbit)
            orbits.append(orbit)
        return orbits

    def roots_of(self, f: Polynomial) -> List[NFElement]:
        """Roots of an arbitrary rational polynomial in N."""
        try:
            return list(self.roots[self.polynomial_index(f)])
        except AmbientMismatch:
            return roots_in_field(f, self.field)

    # ------------------------------------------------------------------ invariants

    @cached_property
    def modulus_discriminant(self) -> Fraction:
        return discriminant(self.field.modulus)

    def verify_group(self) -> bool:
        """Exhaustive check of the group axioms on the table."""
        n = self.order
        e = self.identity_index
        t = self.table
        for i in range(n):
            if t[e][i] != i or t[i][e] != i:
                return False
            if t[i][self.inverses[i]] != e:
                return False
            for j in range(n):
                tij = t[i][j]
                for k in range(n):
                    if t[tij][k] != t[i][t[j][k]]:
                        return False
        return True

    def verify_automorphisms(self) -> bool:
        m = self.field.modulus
        return len(self.autos) == self.degree and all(not m.evaluate(a) for a in self.autos)

    def verify_automorphisms_by_factoring(self) -> bool:
        """The generator images are exactly the roots of the modulus found by factoring it over N."""
        linear = roots_in_field(self.field.modulus, self.field)
        return len(linear) == self.degree and set(linear) == set(self.autos)

    def verify_roots(self) -> bool:
        for f, rs in zip(self.polys, self.roots):
            if len(rs) != f.degree or len(set(rs)) != len(rs):
                return False
            if any(f.evaluate(r) for r in rs):
                return False
        return True

    # ------------------------------------------------------------------ serialization

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "polys": [format_polynomial(f) for f in self.polys],
            "modulus": self.field.to_json(),
            "autos": [a.to_json() for a in self.autos],
            "table": [list(row) for row in self.table],
            "roots": [[r.to_json() for r in rs] for rs in self.roots],
            "primitive_expression": [list(t) for t in self.primitive_expression],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AmbientGaloisField":
        """Rebuild from :meth:`to_json` output, re-validating everything that matters."""
        from ..algebra.parsing import parse_polynomial

        polys = tuple(parse_polynomial(p) for p in data["polys"])
        field = NumberField(Polynomial.rational(data["modulus"]))
        autos = tuple(field.element([Fraction(c) for c in a]) for a in data["autos"])
        roots = tuple(tuple(field.element([Fraction(c) for c in r]) for r in rs) for rs in data["roots"])
        expression = tuple(tuple(int(v) for v in t) for t in data.get("primitive_expression", []))
        ambient = _assemble(polys, field, autos, roots, expression)
        if [list(row) for row in ambient.table] != data["table"]:
            raise VerificationFailed("stored multiplication table does not match the automorphisms")
        if not (ambient.verify_automorphisms() and ambient.verify_roots()):
            raise VerificationFailed("stored ambient field failed validation")
        return ambient


def _sort_automorphisms(field: NumberField, images: Iterable[NFElement]) -> Tuple[NFElement, ...]:
    identity = field.generator
    rest = sorted((a for a in set(images) if a != identity), key=lambda a: a.sort_key())
    return (identity,) + tuple(rest)


def _assemble(
    polys: Tuple[Polynomial, ...],
    field: NumberField,
    images: Iterable[NFElement],
    roots: Sequence[Sequence[NFElement]],
    expression: Tuple[Tuple[int, int, int], ...],
) -> AmbientGaloisField:
    autos = _sort_automorphisms(field, images)
    maps = [FieldMap(field, field, a) for a in autos]
    index = {a: i for i, a in enumerate(autos)}
    table = tuple(tuple(index[maps[i](autos[j])] for j in range(len(autos))) for i in range(len(autos)))
    sorted_roots = tuple(tuple(sorted(rs, key=lambda r: r.sort_key())) for rs in roots)
    return AmbientGaloisField(
        polys=polys, field=field, autos=autos, table=table, roots=sorted_roots, primitive_expression=expression
    )


def _find_automorphisms(
    field: NumberField,
    polys: Tuple[Polynomial, ...],
    roots: Sequence[Sequence[NFElement]],
    adjoined: Sequence[Tuple[int, NFElement, int]],
) -> List[NFElement]:
    """
    Every automorphism sends the generator ``sum(w_j a_j)`` to ``sum(w_j b_j)`` with
    ``b_j`` a root of the same polynomial as ``a_j``. Enumerate those sums and keep
    the roots of the modulus. Finding ``deg m_N`` distinct roots this way means m_N
    splits into exactly these linear factors over N, the same answer factoring it
    over N gives (see ``verify_automorphisms_by_factoring``).
    """
    modulus = field.modulus
    found = set()

    def extend(pos: int, partial: NFElement, used: Dict[int, set]):
        if pos == len(adjoined):
            if partial not in found and not modulus.evaluate(partial):
                found.add(partial)
            return
        k, _, w = adjoined[pos]
        taken = used.setdefault(k, set())
        for r_idx, r in enumerate(roots[k]):
            if r_idx in taken:
                continue
            taken.add(r_idx)
            extend(pos + 1, partial + r * w, used)
            taken.discard(r_idx)

    extend(0, field.zero, {})
    return sorted(found, key=lambda a: a.sort_key())


def splitting_field(polys: Sequence[Polynomial], max_degree: int = DEFAULT_MAX_DEGREE) -> AmbientGaloisField:
    """
    Splitting field over Q of the given polynomials, by iterated root adjunction.

    Raises DegreeCapExceeded when an adjunction would push the degree past
    ``max_degree``. Inputs are screened first: an input of degree above
    ``input_degree_limit(max_degree)``, or an irreducible rational factor of degree
    above ``max_degree``, fails before any work over a number field.
    """
    for f in polys:
        if f.degree > input_degree_limit(max_degree):
            raise DegreeCapExceeded(
                f"input degree {f.degree} is out of reach for a cap of {max_degree}",
                {"cap": max_degree, "reached": f.degree, "polys": [format_polynomial(f)]},
            )
    canonical = canonical_polynomials(polys)
    for f in canonical:
        largest = max(g.degree for g, _ in factor_over_q(f))
        if largest > max_degree:
            raise DegreeCapExceeded(
                f"an irreducible factor of degree {largest} exceeds the cap of {max_degree}",
                {"cap": max_degree, "reached": largest, "polys": [format_polynomial(p) for p in canonical]},
            )
    field = NumberField.rationals()
    roots: List[List[NFElement]] = [[] for _ in canonical]
    # adjoined roots as (poly index, value, weight in the generator)
    adjoined: List[Tuple[int, NFElement, int]] = []
    logger.info(f"Building splitting field of {[format_polynomial(f) for f in canonical]}")

    for k, f in enumerate(canonical):
        while len(roots[k]) < f.degree:
            f_field = field.polynomial_over(f)
            known = Polynomial((field.one,))
            for r in roots[k]:
                known = known * Polynomial.linear_root(r)
            cofactor = f_field.exact_quotient(known)
            factors = factor_over_nf(cofactor, field)
            roots[k].extend(-g.coeffs[0] for g, _ in factors if g.degree == 1)
            nonlinear = [g for g, _ in factors if g.degree > 1]
            if not nonlinear:
                continue
            g = nonlinear[0]
            new_degree = field.degree * g.degree
            if new_degree > max_degree:
                raise DegreeCapExceeded(
                    f"splitting field degree would exceed the cap of {max_degree}",
                    {"cap": max_degree, "reached": new_degree, "polys": [format_polynomial(p) for p in canonical]},
                )
            field, embed, new_root, scale, shift = _adjoin_root(field, g)
            logger.info(f"Adjoined a root of a degree-{g.degree} factor of {format_polynomial(f)}; degree now {field.degree}")
            roots = [[embed(r) for r in rs] for rs in roots]
            adjoined = [(kk, embed(value), w * scale * shift) for kk, value, w in adjoined if shift]
            adjoined.append((k, new_root, scale))
            roots[k].append(new_root)

    generator = field.zero
    for _, value, w in adjoined:
        generator = generator + value * w
    if adjoined and generator != field.generator:
        raise VerificationFailed("primitive element bookkeeping is inconsistent")

    images = _find_automorphisms(field, canonical, roots, adjoined) if adjoined else [field.generator]
    if len(images) != field.degree:
        raise VerificationFailed(
            "splitting field automorphism count does not match its degree",
            {"degree": field.degree, "automorphisms": len(images)},
        )
    sorted_roots = [sorted(rs, key=lambda r: r.sort_key()) for rs in roots]
    expression = tuple((k, sorted_roots[k].index(value), w) for k, value, w in adjoined)
    ambient = _assemble(canonical, field, images, sorted_roots, expression)
    logger.info(f"Splitting field has degree {ambient.degree} and {ambient.order} automorphisms")
    return ambient


def _adjoin_root(field: NumberField, g: Polynomial):
    """
    Adjoin a root ``Y`` of the irreducible ``g`` over ``field``.

    The new generator is ``D*(Y + c*theta)`` for the least ``c >= 0`` whose
    characteristic polynomial is squarefree, with ``D`` clearing denominators.
    Returns ``(new_field, embedding, Y, D, c)``.
    """
    c = 0
    while True:
        matrix = shifted_root_matrix(g, field, c)
        chi = charpoly(matrix)
        if chi.is_squarefree():
            break
        c += 1
    modulus, scale = integralize(chi)
    new_field = NumberField(modulus)
    size = len(matrix)
    # Columns are powers of the new generator applied to 1; invert to express
    # any vector of F[Y]/(g) in the new power basis.
    t_matrix = [[x * scale for x in row] for row in matrix]
    power = [Fraction(0)] * size
    power[0] = Fraction(1)
    columns = []
    for _ in range(size):
        columns.append(power)
        power = mat_vec(t_matrix, power)
    change = inverse([[columns[j][i] for j in range(size)] for i in range(size)])

    def express(vector: List[Fraction]) -> NFElement:
        return new_field.element(mat_vec(change, vector))

    n = field.degree
    theta_vec = [Fraction(0)] * size
    if n > 1:
        theta_vec[1] = Fraction(1)
    else:
        theta_vec[0] = field.generator.rational_value()
    y_vec = [Fraction(0)] * size
    y_vec[n] = Fraction(1)
    embedding = FieldMap(field, new_field, express(theta_vec))
    return new_field, embedding, express(y_vec), scale, c


# ---------------------------------------------------------------------- maps between ambients


@dataclass(frozen=True, eq=False)
class AmbientMap:
    """
    An embedding ``iota: N -> N'`` together with the induced surjection
    ``pi: Gal(N'/Q) -> Gal(N/Q)`` characterized by ``iota(pi(s)(x)) = s(iota(x))``.
    ``projection[j]`` is ``pi`` of target automorphism ``j``.
    """

    source: AmbientGaloisField
    target: AmbientGaloisField
    image: NFElement
    projection: Tuple[int, ...]

    @cached_property
    def embedding(self) -> FieldMap:
        return FieldMap(self.source.field, self.target.field, self.image)

    def __call__(self, a: NFElement) -> NFElement:
        return self.embedding(a)

    def kernel(self) -> List[int]:
        return [j for j, i in enumerate(self.projection) if i == self.source.identity_index]

    def is_identity(self) -> bool:
        return self.source == self.target and self.image == self.source.generator

    def compose(self, inner: "AmbientMap") -> "AmbientMap":
        """``self ∘ inner``, with the projection recomputed from the composite image."""
        if inner.target != self.source:
            raise AmbientMismatch("ambient maps are not composable")
        image = self(inner.image)
        return AmbientMap(inner.source, self.target, image, projection_from_image(inner.source, self.target, image))

    def composite_projection(self, inner: "AmbientMap") -> Tuple[int, ...]:
        """``pi_inner ∘ pi_self``, the projection predicted by functoriality."""
        return tuple(inner.projection[i] for i in self.projection)

    def to_json(self) -> dict:
        return {
            "image": self.image.to_json(),
            "projection": list(self.projection),
            "kernel_order": len(self.kernel()),
        }


def projection_from_image(
    source: AmbientGaloisField, target: AmbientGaloisField, image: NFElement
) -> Tuple[int, ...]:
    embed = FieldMap(source.field, target.field, image)
    if not embed.is_homomorphism():
        raise NotAnEmbedding("image is not a root of the source modulus")
    lookup = {embed(a): i for i, a in enumerate(source.autos)}
    out = []
    for j in range(target.order):
        moved = target.apply(j, image)
        if moved not in lookup:
            raise NotAnEmbedding("target automorphism does not preserve the embedded field")
        out.append(lookup[moved])
    return tuple(out)


def identity_map(ambient: AmbientGaloisField) -> AmbientMap:
    return AmbientMap(ambient, ambient, ambient.generator, tuple(range(ambient.order)))


def ambient_map(source: AmbientGaloisField, target: AmbientGaloisField) -> AmbientMap:
    """
    Canonical embedding of ``source`` into ``target``: the least (by coordinates)
    image of the source generator.
    """
    if source == target:
        return identity_map(source)
    candidates = _embedding_images(source, target)
    if not candidates:
        raise AmbientMismatch("source ambient does not embed into the target ambient")
    image = candidates[0]
    return AmbientMap(source, target, image, projection_from_image(source, target, image))


def _embedding_images(source: AmbientGaloisField, target: AmbientGaloisField) -> List[NFElement]:
    if source.degree == 1:
        return [target.field.rational(source.generator.rational_value())]
    positions = []
    for p in source.polys:
        try:
            positions.append(target.polynomial_index(p))
        except AmbientMismatch:
            positions = None
            break
    if positions is not None and source.primitive_expression:
        target_roots = [target.roots[positions[k]] for k in range(len(source.polys))]
        adjoined = [(k, None, w) for k, _, w in source.primitive_expression]
        found = set()
        modulus = source.field.modulus

        def extend(pos: int, partial: NFElement, used: Dict[int, set]):
            if pos == len(adjoined):
                if partial not in found and not modulus.evaluate(partial):
                    found.add(partial)
                return
            k, _, w = adjoined[pos]
            taken = used.setdefault(k, set())
            for r_idx, r in enumerate(target_roots[k]):
                if r_idx in taken:
                    continue
                taken.add(r_idx)
                extend(pos + 1, partial + r * w, used)
                taken.discard(r_idx)

        extend(0, target.field.zero, {})
        return sorted(found, key=lambda a: a.sort_key())
    return roots_in_field(source.field.modulus, target.field)


def extend_ambient(
    ambient: AmbientGaloisField, f: Polynomial, max_degree: int = DEFAULT_MAX_DEGREE
) -> Tuple[AmbientGaloisField, AmbientMap]:
    """
    Smallest ambient containing ``ambient`` and the roots of ``f``, with the map
    from the old ambient. When ``f`` already splits the ambient is returned with
    the identity map.
    """
    g = f.squarefree_part()
    if g.degree < 1 or len(ambient.roots_of(g)) == g.degree:
        logger.info(f"{format_polynomial(f)} already splits in the ambient")
        return ambient, identity_map(ambient)
    extended = splitting_field(list(ambient.polys) + [g], max_degree)
    return extended, ambient_map(ambient, extended)
