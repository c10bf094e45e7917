# src/algebraicgalois/algebra/linalg.py
"""
Exact linear algebra on top of sympy's ``DomainMatrix``: over Q, and over a number
field through its ``QQ<theta>`` domain.

Matrices are passed around as lists of rows of ``Fraction``.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .number_field import NFElement, NumberField
from .polynomial import Polynomial

logger = logging.getLogger(__name__)

Matrix = List[List[Fraction]]


def _to_qq(value: Any):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_qq(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def to_domain_matrix(rows: Sequence[Sequence[Any]], ncols: int) -> DomainMatrix:
    return DomainMatrix([[_to_qq(v) for v in row] for row in rows], (len(rows), ncols), QQ)


def from_domain_matrix(dm: DomainMatrix) -> Matrix:
    nrows, ncols = dm.shape
    if not nrows or not ncols:
        return [[] for _ in range(nrows)]
    sym = dm.to_Matrix()
    return [[Fraction(int(sym[i, j].p), int(sym[i, j].q)) for j in range(ncols)] for i in range(nrows)]


def rref(rows: Sequence[Sequence[Any]], ncols: int) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form; zero rows are dropped."""
    if not rows:
        return [], ()
    reduced, pivots = to_domain_matrix(rows, ncols).rref()
    pivots = tuple(pivots)
    dense = from_domain_matrix(reduced)
    return dense[: len(pivots)], pivots


def rank(rows: Sequence[Sequence[Any]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Any]], ncols: int) -> Matrix:
    """
    Basis of ``{v : rows * v = 0}`` in reduced echelon form, so the result is
    canonical for the subspace.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis: Matrix = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][free]
        basis.append(vec)
    if not basis:
        return []
    canonical, _ = rref(basis, ncols)
    return canonical


def inverse(rows: Sequence[Sequence[Any]]) -> Matrix:
    n = len(rows)
    return from_domain_matrix(to_domain_matrix(rows, n).inv())


def matmul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Matrix:
    if not a or not b:
        return [[] for _ in a]
    da = to_domain_matrix(a, len(a[0]))
    db = to_domain_matrix(b, len(b[0]))
    return from_domain_matrix(da.matmul(db))


def mat_vec(a: Sequence[Sequence[Any]], v: Sequence[Any]) -> List[Any]:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def transpose(a: Sequence[Sequence[Any]]) -> List[List[Any]]:
    return [list(col) for col in zip(*a)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def kronecker(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Matrix:
    rb, cb = len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * (len(a[0]) * cb if a else 0) for _ in range(len(a) * rb)]
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if not x:
                continue
            for k in range(rb):
                for m in range(cb):
                    if b[k][m]:
                        out[i * rb + k][j * cb + m] = x * b[k][m]
    return out


def charpoly(rows: Sequence[Sequence[Any]]) -> Polynomial:
    """Characteristic polynomial ``det(x I - M)`` as a rational Polynomial."""
    n = len(rows)
    coeffs = to_domain_matrix(rows, n).charpoly()
    return Polynomial(tuple(_from_qq(c) for c in reversed(coeffs)))


class NotInSpan(ValueError):
    """The target vector is not a linear combination of the spanning vectors."""


class ColumnSpaceSolver:
    """
    Coordinates with respect to a fixed list of linearly independent vectors.

    An invertible square submatrix is chosen once, so each solve is a matrix-vector
    product plus an exact membership check.
    """

    def __init__(self, vectors: Sequence[Sequence[Any]]):
        self.vectors = [[Fraction(v) for v in vec] for vec in vectors]
        self.k = len(self.vectors)
        self.m = len(self.vectors[0]) if self.vectors else 0
        _, pivots = rref(self.vectors, self.m)
        if len(pivots) != self.k:
            raise ValueError("spanning vectors are linearly dependent")
        self.rows = pivots
        square = [[self.vectors[j][r] for j in range(self.k)] for r in self.rows]
        self._inverse = inverse(square) if self.k else []

    def coordinates(self, target: Sequence[Any]) -> List[Fraction]:
        target = [Fraction(t) for t in target]
        picked = [target[r] for r in self.rows]
        coords = mat_vec(self._inverse, picked)
        for i in range(self.m):
            value = sum((c * self.vectors[j][i] for j, c in enumerate(coords) if c), Fraction(0))
            if value != target[i]:
                raise NotInSpan("vector is not in the span")
        return coords

    def try_coordinates(self, target: Sequence[Any]) -> Optional[List[Fraction]]:
        try:
            return self.coordinates(target)
        except NotInSpan:
            return None


# ---------------------------------------------------------------------- number-field matrices


@lru_cache(maxsize=None)
def algebraic_domain(field: NumberField):
    """
    sympy's ``QQ<theta>`` for ``field``, with ``theta`` a root of the modulus, so that
    power-basis coordinates carry over unchanged.
    """
    t = sympy.Symbol("t")
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(field.modulus.coeffs)]
    minpoly = sympy.Poly(coeffs, t, domain=QQ)
    _, integral = minpoly.clear_denoms(convert=True)
    return QQ.algebraic_field((minpoly, sympy.CRootOf(integral, 0)))


def _field_of(matrix: Sequence[Sequence[Any]]) -> Optional[NumberField]:
    for row in matrix:
        for x in row:
            if isinstance(x, NFElement):
                return x.field
    return None


def _to_field_dm(matrix: Sequence[Sequence[Any]], ncols: int) -> Tuple[DomainMatrix, Optional[NumberField]]:
    field = _field_of(matrix)
    if field is None or field.is_rationals():
        rows = [[x.rational_value() if isinstance(x, NFElement) else x for x in row] for row in matrix]
        return to_domain_matrix(rows, ncols), field
    domain = algebraic_domain(field)

    def convert(x: Any):
        coords = x.coords if isinstance(x, NFElement) else (Fraction(x),)
        return domain.new([_to_qq(c) for c in reversed(coords)])

    return DomainMatrix([[convert(x) for x in row] for row in matrix], (len(matrix), ncols), domain), field


def _from_field_element(value: Any, field: Optional[NumberField]) -> Any:
    if field is None:
        return _from_qq(value)
    if field.is_rationals():
        return field.rational(_from_qq(value))
    return field.element([_from_qq(c) for c in reversed(value.to_list())])


def field_inverse(matrix: Sequence[Sequence[Any]]) -> List[List[Any]]:
    """
    Inverse of a square matrix with number-field (or rational) entries, through
    ``DomainMatrix`` over ``QQ<theta>``. Raises ZeroDivisionError when singular.
    """
    n = len(matrix)
    if n == 0:
        return []
    dm, field = _to_field_dm(matrix, n)
    try:
        inv = dm.inv()
    except DMNonInvertibleMatrixError:
        raise ZeroDivisionError("singular matrix")
    return [[_from_field_element(x, field) for x in row] for row in inv.to_list()]


def field_rank(matrix: Sequence[Sequence[Any]]) -> int:
    if not matrix or not matrix[0]:
        return 0
    dm, _ = _to_field_dm(matrix, len(matrix[0]))
    return dm.rank()


def field_rref(matrix: Sequence[Sequence[Any]]) -> List[List[Any]]:
    """Reduced row echelon form over the entries' number field; zero rows are dropped."""
    if not matrix or not matrix[0]:
        return []
    dm, field = _to_field_dm(matrix, len(matrix[0]))
    reduced, pivots = dm.rref()
    rows = reduced.to_list()[: len(pivots)]
    if field is None:
        return [[_from_qq(x) for x in row] for row in rows]
    return [[_from_field_element(x, field) for x in row] for row in rows]
