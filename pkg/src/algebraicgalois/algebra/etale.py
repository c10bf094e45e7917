# src/algebraicgalois/algebra/etale.py
"""
Finite commutative Q-algebras given by structure constants, and their splitting
into field factors.

A generic element ``z`` of an étale algebra has a squarefree characteristic
polynomial ``chi``; then ``A = Q[z] = Q[x]/(chi)`` and the irreducible factors of
``chi`` correspond to the field factors. The primitive idempotents come from the
Chinese remainder theorem.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..core.errors import VerificationFailed
from .factorization import factor_over_q
from .linalg import charpoly
from .polynomial import Polynomial

logger = logging.getLogger(__name__)

Vector = List[Fraction]

MAX_GENERIC_ATTEMPTS = 64


@dataclass
class EtaleFactor:
    idempotent: Vector
    minimal_polynomial: Polynomial

    @property
    def degree(self) -> int:
        return self.minimal_polynomial.degree


@dataclass
class EtaleAlgebra:
    """
    ``structure[i][j]`` is the coordinate vector of ``e_i * e_j``; ``unit`` the
    coordinates of 1.
    """

    structure: List[List[Vector]]
    unit: Vector
    _factors: Optional[List[EtaleFactor]] = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.unit)

    def zero(self) -> Vector:
        return [Fraction(0)] * self.dim

    def multiply(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
        out = self.zero()
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for k, c in enumerate(self.structure[i][j]):
                    if c:
                        out[k] += xy * c
        return out

    def multiplication_matrix(self, a: Sequence[Fraction]) -> List[Vector]:
        columns = []
        for j in range(self.dim):
            e_j = self.zero()
            e_j[j] = Fraction(1)
            columns.append(self.multiply(a, e_j))
        return [[columns[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def evaluate(self, poly: Polynomial, z: Sequence[Fraction]) -> Vector:
        acc = self.zero()
        for c in reversed(poly.coeffs):
            acc = self.multiply(acc, z)
            acc = [a + c * u for a, u in zip(acc, self.unit)]
        return acc

    def is_commutative(self) -> bool:
        return all(
            self.structure[i][j] == self.structure[j][i] for i in range(self.dim) for j in range(i + 1, self.dim)
        )

    def _candidates(self):
        d = self.dim
        for k in range(2, 2 + MAX_GENERIC_ATTEMPTS):
            yield [Fraction(k ** j % 997 + j) for j in range(d)]

    def generic_element(self) -> Tuple[Vector, Polynomial]:
        """A deterministic element with squarefree characteristic polynomial."""
        for z in self._candidates():
            chi = charpoly(self.multiplication_matrix(z))
            if chi.is_squarefree():
                return z, chi
        raise VerificationFailed("algebra has no generic element; it is not étale", {"dim": self.dim})

    def factors(self) -> List[EtaleFactor]:
        if self._factors is not None:
            return self._factors
        if self.dim == 0:
            self._factors = []
            return self._factors
        z, chi = self.generic_element()
        out: List[EtaleFactor] = []
        for g, _ in factor_over_q(chi):
            cofactor = chi.exact_quotient(g)
            _, s, _ = cofactor.xgcd(g)
            # e = cofactor(z) * s(z) is 1 on the g-component and 0 elsewhere
            e = self.evaluate((cofactor * s) % chi, z)
            out.append(EtaleFactor(idempotent=e, minimal_polynomial=g))
        logger.debug(f"Split étale algebra of dimension {self.dim} into degrees {[f.degree for f in out]}")
        self._factors = out
        return out

    def primitive_idempotents(self) -> List[Vector]:
        return [f.idempotent for f in self.factors()]

    def factor_degrees(self) -> List[int]:
        return sorted(f.degree for f in self.factors())
