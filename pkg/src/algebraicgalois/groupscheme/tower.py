# src/algebraicgalois/groupscheme/tower.py
"""
Finite truncations of the absolute algebraic Galois group of Q.

The input polynomials are adjoined one at a time; the splitting field of each
prefix is a level of the tower. Between consecutive levels the chain is refined
by inserting the fixed fields of the largest normal subgroups in between, so
every level is Galois over Q and the steps are as small as the group allows.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from ..algebra.number_field import NFElement
from ..algebra.polynomial import Polynomial
from ..galois.ambient import DEFAULT_MAX_DEGREE, AmbientGaloisField, splitting_field
from ..galois.embeddings import GaloisSubextension, embeddings, identity_embedding
from ..galois.subgroups import Subgroup, normal_subgroups, roots_stabilizer
from .coordinate_ring import CoordinateRing, build_coordinate_ring
from .restriction import RestrictionMap, restriction

logger = logging.getLogger(__name__)


def _refine(upper: Subgroup, lower: Subgroup, normals: List[Subgroup]) -> List[Subgroup]:
    """Normal subgroups strictly between ``lower`` and ``upper``, largest first."""
    chain: List[Subgroup] = []
    current = upper
    while True:
        between = [
            s
            for s in normals
            if lower.is_subgroup_of(s) and s.is_subgroup_of(current) and s != current and s != lower
        ]
        if not between:
            return chain
        best = max(between, key=lambda s: (s.order, tuple(-m for m in s.members)))
        chain.append(best)
        current = best


def level_subgroups(ambient: AmbientGaloisField, polys: Sequence[Polynomial]) -> List[Subgroup]:
    """Decreasing chain of normal subgroups from the whole group down to the trivial one."""
    whole = Subgroup.whole(ambient)
    prefixes: List[Subgroup] = [whole]
    indices: List[int] = []
    for f in polys:
        if f.degree < 1:
            continue
        indices.append(ambient.polynomial_index(f))
        h = roots_stabilizer(ambient, indices)
        if h != prefixes[-1]:
            prefixes.append(h)
    if prefixes[-1].order != 1:
        prefixes.append(Subgroup.trivial(ambient))
    normals = normal_subgroups(ambient)
    chain = [whole]
    for upper, lower in zip(prefixes, prefixes[1:]):
        chain.extend(_refine(upper, lower, normals))
        chain.append(lower)
    return chain


@dataclass
class TruncatedAbsoluteGroup:
    """
    ``levels[i]`` is L_i/Q inside one ambient; ``maps[(i, j)]`` for ``i <= j`` is the
    restriction map ``A(L_i/Q) -> A(L_j/Q)`` induced by the inclusion.
    """

    ambient: AmbientGaloisField
    levels: List[GaloisSubextension]
    rings: List[CoordinateRing]
    maps: Dict[Tuple[int, int], RestrictionMap] = field(default_factory=dict)

    @property
    def degrees(self) -> List[int]:
        return [e.degree for e in self.levels]

    def _compose(self, outer: RestrictionMap, inner: RestrictionMap) -> List[List[NFElement]]:
        zero = self.ambient.field.zero
        a, b = outer.matrix, inner.matrix
        return [
            [sum((a[i][k] * b[k][j] for k in range(len(b)) if a[i][k] and b[k][j]), zero) for j in range(len(b[0]))]
            for i in range(len(a))
        ]

    def functoriality_check(self) -> bool:
        n = len(self.levels)
        for i in range(n):
            for j in range(i, n):
                for k in range(j, n):
                    if self._compose(self.maps[(j, k)], self.maps[(i, j)]) != self.maps[(i, k)].matrix:
                        return False
        return True

    def injectivity_check(self) -> bool:
        return all(m.is_injective() for m in self.maps.values())

    def embedding_independence_check(self) -> bool:
        """Every embedding ``L_i -> L_j`` (all of them are ``t ∘ inclusion``) gives the same matrix."""
        n = len(self.levels)
        for i in range(n):
            phis = embeddings(self.levels[i], self.ambient)
            for j in range(i, n):
                expected = self.maps[(i, j)].matrix
                for phi in phis:
                    if restriction(phi, self.rings[i], self.rings[j]).matrix != expected:
                        return False
        return True

    def checks(self) -> Dict[str, bool]:
        return {
            "functorial": self.functoriality_check(),
            "injective": self.injectivity_check(),
            "embedding_independent": self.embedding_independence_check(),
        }

    def to_json(self) -> dict:
        return {
            "ambient_degree": self.ambient.degree,
            "levels": [
                {
                    "degree": e.degree,
                    "minimal_polynomial": [str(c) for c in e.top.minimal_polynomial.coeffs],
                    "subgroup": e.inner.to_json(),
                }
                for e in self.levels
            ],
            "maps": [
                {"from": i, "to": j, **m.to_json()} for (i, j), m in sorted(self.maps.items()) if i < j
            ],
        }


def truncated_absolute_group(
    polys: Sequence[Polynomial], max_degree: int = DEFAULT_MAX_DEGREE, ambient: AmbientGaloisField = None
) -> TruncatedAbsoluteGroup:
    """
    The tower of splitting fields of the prefixes of ``polys`` (refined by normal
    subgroups) with the coordinate ring of every level and all restriction maps.
    """
    if ambient is None:
        ambient = splitting_field(polys, max_degree)
    chain = level_subgroups(ambient, polys)
    whole = Subgroup.whole(ambient)
    levels = [GaloisSubextension(h, whole) for h in chain]
    rings = [build_coordinate_ring(e) for e in levels]
    tower = TruncatedAbsoluteGroup(ambient, levels, rings)
    for i, e_i in enumerate(levels):
        inclusion = identity_embedding(e_i)
        for j in range(i, len(levels)):
            tower.maps[(i, j)] = restriction(inclusion, rings[i], rings[j])
    logger.info(f"Tower of degrees {tower.degrees} inside an ambient of degree {ambient.degree}")
    return tower
