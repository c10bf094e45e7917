# src/algebraicgalois/frobenius/infinite.py
"""
Frobenius at the infinite place of Q.

The infinite place is unramified in L exactly when L is totally real; then
complex conjugation is trivial on L and the Frobenius point is the identity.
Real roots are counted exactly with a Sturm sequence.
"""
import logging

import sympy

from ..algebra.factorization import to_sympy_poly
from ..algebra.polynomial import Polynomial
from ..core.errors import RamifiedInfinitePlace
from ..groupscheme.coordinate_ring import CoordinateRing
from ..groupscheme.points import AlgebraPoint, galois_to_point

logger = logging.getLogger(__name__)


def _sign_changes(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f: Polynomial) -> int:
    """Number of distinct real roots of a squarefree rational polynomial."""
    if f.degree < 1:
        return 0
    sequence = sympy.sturm(to_sympy_poly(f))
    at_plus = [sympy.sign(p.LC()) for p in sequence]
    at_minus = [sympy.sign(p.LC()) * (-1) ** p.degree() for p in sequence]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def is_totally_real(f: Polynomial) -> bool:
    return count_real_roots(f) == f.degree


def frobenius_at_infinity(ring: CoordinateRing) -> AlgebraPoint:
    """The identity point of A(L/Q) when L is totally real."""
    ext = ring.extension
    if not ext.is_over_rationals():
        raise ValueError("the infinite place is only handled over the base field Q")
    minpoly = ext.top.minimal_polynomial
    real = count_real_roots(minpoly)
    if real != minpoly.degree:
        raise RamifiedInfinitePlace(
            "the infinite place ramifies: the field is not totally real",
            {"degree": minpoly.degree, "real_roots": real},
        )
    logger.debug(f"Field of degree {minpoly.degree} is totally real")
    return galois_to_point(ring, ext.identity)
