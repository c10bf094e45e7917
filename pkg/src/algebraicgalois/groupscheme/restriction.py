# src/algebraicgalois/groupscheme/restriction.py
"""
Restriction maps ``phi_*: A(L1/K) -> A(L2/K)`` induced by K-embeddings
``phi: L1 -> L2``, with ``(phi_* f)(t) = phi(f(t restricted to L1 via phi))``.

The matrix of ``phi_*`` does not depend on ``phi``; :func:`embedding_independence`
computes it once per embedding and compares exactly.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional

from ..algebra.linalg import field_rank
from ..algebra.number_field import NFElement
from ..core.errors import AmbientMismatch, NotAnEmbedding
from ..galois.ambient import AmbientMap
from ..galois.embeddings import FieldEmbedding, embeddings, restrict_automorphism
from .coordinate_ring import CoordinateRing, KMatrix

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class RestrictionMap:
    """``matrix[i][j]``: coordinate i (in the destination basis) of ``phi_*`` of source basis element j."""

    source: CoordinateRing
    dest: CoordinateRing
    embedding: FieldEmbedding
    matrix: KMatrix

    def apply(self, coords) -> List[NFElement]:
        """Image of a source element; source K-coefficients are carried over by ``phi``."""
        zero = self.dest.ambient.field.zero
        mapped = [self.embedding(c) for c in coords]
        out = []
        for row in self.matrix:
            value = zero
            for x, c in zip(row, mapped):
                if x and c:
                    value = value + x * c
            out.append(value)
        return out

    # ------------------------------------------------------------------ checks

    def is_algebra_homomorphism(self) -> bool:
        if self.apply(self.source.unit) != list(self.dest.unit):
            return False
        images = [self.dest.function(col) for col in self.columns]
        for j in range(self.source.dim):
            for k in range(j, self.source.dim):
                product = self.dest.function(self.apply(self.source.structure_constants[j][k]))
                expected = tuple(a * b for a, b in zip(images[j], images[k]))
                if product != expected:
                    return False
        return True

    @cached_property
    def columns(self) -> List[List[NFElement]]:
        return [[row[j] for row in self.matrix] for j in range(self.source.dim)]

    def commutes_with_comultiplication(self) -> bool:
        """``Delta2(phi_* f) = (phi_* ⊗ phi_*) Delta1(f)`` on every source basis element."""
        dest = self.dest
        zero = dest.ambient.field.zero
        r1, r2 = self.source.dim, dest.dim
        for m, d_m in enumerate(self.source.comultiplication):
            left = dest.comultiply(self.columns[m])
            d_mapped = [[self.embedding(c) for c in row] for row in d_m]
            for a in range(r2):
                for b in range(r2):
                    value = zero
                    for p in range(r1):
                        x = self.matrix[a][p]
                        if not x:
                            continue
                        for q in range(r1):
                            if d_mapped[p][q] and self.matrix[b][q]:
                                value = value + x * d_mapped[p][q] * self.matrix[b][q]
                    if value != left[a][b]:
                        return False
        return True

    def commutes_with_counit(self) -> bool:
        for j in range(self.source.dim):
            value = self.dest.ambient.field.zero
            for i, c in enumerate(self.columns[j]):
                value = value + self.dest.counit[i] * c
            if value != self.embedding(self.source.counit[j]):
                return False
        return True

    def is_injective(self) -> bool:
        return field_rank(self.columns) == self.source.dim

    def checks(self) -> Dict[str, bool]:
        return {
            "algebra_homomorphism": self.is_algebra_homomorphism(),
            "comultiplication": self.commutes_with_comultiplication(),
            "counit": self.commutes_with_counit(),
            "injective": self.is_injective(),
        }

    def to_json(self) -> dict:
        base = self.dest.extension.base
        return {
            "source_dim": self.source.dim,
            "dest_dim": self.dest.dim,
            "matrix": [[[str(c) for c in base.coordinates(x)] for x in row] for row in self.matrix],
        }


def restriction(phi: FieldEmbedding, source: CoordinateRing, dest: CoordinateRing) -> RestrictionMap:
    """``phi_*`` for an embedding of ``source``'s top field into ``dest``'s top field."""
    if phi.source != source.extension or phi.target != dest.ambient:
        raise AmbientMismatch("embedding does not connect the two coordinate rings")
    e2 = dest.extension
    if not e2.top.contains(phi.image):
        raise NotAnEmbedding("embedding does not land in the destination field")
    kappa = phi.image_of_base()
    if e2.base.degree != source.extension.base.degree or not e2.base.contains(kappa):
        raise AmbientMismatch("destination base field is not the image of the source base field")

    reps = e2.coset_reps
    restricted = [restrict_automorphism(rep, phi) for rep in reps]
    columns = []
    for f in source.basis:
        pushed = [phi(f[s]) for s in restricted]
        columns.append(dest.coordinates(pushed))
    matrix = [[columns[j][i] for j in range(source.dim)] for i in range(dest.dim)]
    logger.debug(f"Restriction map {source.dim} -> {dest.dim} computed")
    return RestrictionMap(source, dest, phi, matrix)


def embedding_independence(
    source: CoordinateRing, dest: CoordinateRing, base_map: Optional[AmbientMap] = None
) -> Dict[str, object]:
    """
    Build ``phi_*`` for every K-embedding of L1 into the ambient of L2 and compare the
    matrices exactly. Returns the common map and the comparison outcome.
    """
    phis = embeddings(source.extension, dest.ambient, base_map)
    maps = [restriction(phi, source, dest) for phi in phis]
    first = maps[0].matrix
    return {
        "embeddings": len(phis),
        "identical": all(m.matrix == first for m in maps),
        "map": maps[0],
    }
