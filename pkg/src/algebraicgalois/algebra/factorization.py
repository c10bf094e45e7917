# src/algebraicgalois/algebra/factorization.py
"""
Factorization of univariate polynomials over Q and over absolute number fields.

Over Q the work is delegated to sympy's Zassenhaus implementation (factorization
modulo a small prime, Hensel lifting, recombination). Over a number field F the
norm reduction is used: shift ``x -> x - s*theta`` until the norm is squarefree,
factor the norm over Q and recover the factors with gcds over F.
"""
import logging
from fractions import Fraction
from math import gcd
from typing import Any, List, Tuple

import sympy
from sympy import Poly

from ..core.errors import VerificationFailed
from .linalg import charpoly
from .number_field import NFElement, NumberField
from .polynomial import Polynomial

logger = logging.getLogger(__name__)

_X = sympy.Symbol("x")

Factorization = List[Tuple[Polynomial, int]]


def coefficient_key(c: Any) -> Tuple[Fraction, ...]:
    if isinstance(c, NFElement):
        return c.coords
    return (Fraction(c),)


def polynomial_key(f: Polynomial) -> Tuple[int, Tuple[Tuple[Fraction, ...], ...]]:
    """Canonical order: by degree, then coefficient sequences from the top down."""
    return (f.degree, tuple(coefficient_key(c) for c in reversed(f.coeffs)))


def to_integer_coefficients(f: Polynomial) -> List[int]:
    """Primitive integer multiple of ``f``, highest degree first."""
    den = 1
    for c in f.coeffs:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in f.coeffs]
    content = 0
    for a in ints:
        content = gcd(content, a)
    if content > 1:
        ints = [a // content for a in ints]
    return list(reversed(ints))


def to_sympy_poly(f: Polynomial) -> Poly:
    return Poly(to_integer_coefficients(f), _X, domain="ZZ")


def from_sympy_poly(p: Poly) -> Polynomial:
    return Polynomial(tuple(Fraction(int(c)) for c in reversed(p.all_coeffs())))


def factor_over_q(f: Polynomial) -> Factorization:
    """
    Irreducible monic factors of a nonzero rational polynomial with multiplicities,
    sorted canonically. The product of ``factor**mult`` equals ``f.monic()``.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    _, factors = to_sympy_poly(f).factor_list()
    out = [(from_sympy_poly(p).monic(), int(m)) for p, m in factors]
    out.sort(key=lambda fm: polynomial_key(fm[0]))

    product = Polynomial((Fraction(1),))
    for g, m in out:
        product = product * g ** m
    if product != f.monic():
        raise VerificationFailed(
            "factorization does not reproduce its input",
            {"input": [str(c) for c in f.coeffs]},
        )
    return out


def _shift_element(field: NumberField, s: int) -> NFElement:
    return field.generator * s


def shifted_root_matrix(f: Polynomial, field: NumberField, shift: int = 0) -> List[List[Fraction]]:
    """
    Rational matrix of multiplication by ``Y + shift*theta`` on ``F[Y]/(f)``.

    The Q-basis is ``theta^i * Y^j`` with index ``j*n + i``.
    """
    f = f.monic()
    n, d = field.degree, f.degree
    coeffs = [c if isinstance(c, NFElement) else field.rational(c) for c in f.coeffs]
    s_theta = _shift_element(field, shift)
    basis = field.power_basis()
    size = n * d
    columns: List[List[Fraction]] = []
    for j in range(d):
        for i in range(n):
            # basis vector theta^i * Y^j, as Y-coefficient list
            vec = [field.zero] * d
            vec[j] = basis[i]
            shifted = [field.zero] + vec[:-1]
            top = vec[-1]
            if top:
                shifted = [shifted[k] - top * coeffs[k] for k in range(d)]
            if shift:
                shifted = [shifted[k] + s_theta * vec[k] for k in range(d)]
            col: List[Fraction] = []
            for k in range(d):
                col.extend(shifted[k].coords)
            columns.append(col)
    return [[columns[c][r] for c in range(size)] for r in range(size)]


def norm(f: Polynomial, field: NumberField, shift: int = 0) -> Polynomial:
    """
    ``Res_y(m(y), f(x - shift*y))`` for monic ``f`` with coefficients in ``field``,
    computed as the characteristic polynomial of :func:`shifted_root_matrix`.
    """
    return charpoly(shifted_root_matrix(f, field, shift))


def _rational_polynomial(f: Polynomial) -> Polynomial:
    return Polynomial(tuple(c.rational_value() if isinstance(c, NFElement) else c for c in f.coeffs))


def _factor_squarefree_over_nf(f: Polynomial, field: NumberField) -> List[Polynomial]:
    if f.degree <= 1:
        return [f.monic()]
    s = 0
    while True:
        nrm = norm(f, field, s)
        if nrm.is_squarefree():
            break
        s += 1
    logger.debug(f"Squarefree norm of degree {nrm.degree} found at shift {s}")
    rational_factors = factor_over_q(nrm)
    if len(rational_factors) == 1:
        return [f.monic()]
    s_theta = _shift_element(field, s)
    shifted = f.shift(-s_theta)
    out: List[Polynomial] = []
    for h, _ in rational_factors:
        common = shifted.gcd(field.polynomial_over(h))
        if common.degree > 0:
            out.append(common.shift(s_theta).monic())
    return out


def factor_over_nf(f: Polynomial, field: NumberField) -> Factorization:
    """
    Irreducible monic factors of ``f`` over ``field`` with multiplicities, sorted
    canonically. Rational coefficients are coerced into the field.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if field.is_rationals():
        return [(field.polynomial_over(g), m) for g, m in factor_over_q(_rational_polynomial(f))]
    f = Polynomial(tuple(c if isinstance(c, NFElement) else field.rational(c) for c in f.coeffs))
    out: Factorization = []
    for part, mult in f.squarefree_decomposition():
        for g in _factor_squarefree_over_nf(part, field):
            out.append((g, mult))
    out.sort(key=lambda fm: polynomial_key(fm[0]))
    return out


def roots_in_field(f: Polynomial, field: NumberField) -> List[NFElement]:
    """Distinct roots of ``f`` in ``field``, sorted by coordinates."""
    roots = [-g.coeffs[0] for g, _ in factor_over_nf(f, field) if g.degree == 1]
    return sorted(set(roots), key=lambda r: r.sort_key())
