# src/algebraicgalois/frobenius/primes.py
"""
Reduction of an ambient field modulo a rational prime and the Frobenius
automorphism attached to a prime above it.

A prime p is usable when it divides neither a denominator nor the discriminant
of any defining polynomial; then p is unramified in N. Reduction goes through a
primitive element ``alpha`` whose minimal polynomial ``m`` is p-integral with
discriminant prime to p, so that ``Z_(p)[alpha]`` is the full local ring of
integers. The generator of N is tried first; other integral combinations of the
stored roots are tried when p divides the discriminant of the modulus. A prime
of N above p is an irreducible factor ``g`` of ``m`` mod p, with residue field
``F_p[t]/(g)``.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor, gf_from_int_poly, gf_pow_mod, gf_rem

from ..algebra.factorization import to_integer_coefficients
from ..algebra.linalg import ColumnSpaceSolver, NotInSpan, charpoly
from ..algebra.number_field import NFElement
from ..algebra.parsing import format_polynomial
from ..algebra.polynomial import Polynomial, discriminant
from ..core.errors import RamifiedOrBadPrime
from ..galois.ambient import AmbientGaloisField

logger = logging.getLogger(__name__)

GF = List[int]

MAX_REDUCTION_CANDIDATES = 16


def _check_prime(p: int):
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not a prime")


def _p_integral(values: Sequence[Fraction], p: int) -> bool:
    return all(Fraction(v).denominator % p for v in values)


def reduce_rational_coefficients(coeffs_low_first: Sequence[Fraction], p: int) -> GF:
    """p-integral rationals mod p, highest degree first."""
    coeffs = [Fraction(c) for c in reversed(coeffs_low_first)]
    return gf_from_int_poly([c.numerator * pow(c.denominator, -1, p) for c in coeffs], p)


@dataclass(frozen=True, eq=False)
class ReductionBasis:
    """A primitive element of N with its power basis and the images of it under every automorphism."""

    primitive: NFElement
    minimal_polynomial: Polynomial
    discriminant: Fraction
    solver: ColumnSpaceSolver
    images: Tuple[Tuple[Fraction, ...], ...]

    def express(self, a: NFElement) -> List[Fraction]:
        """Coordinates of ``a`` in the power basis of the primitive element."""
        return self.solver.coordinates(a.coords)

    def usable_at(self, p: int) -> bool:
        return _p_integral(self.minimal_polynomial.coeffs, p) and Fraction(self.discriminant).numerator % p != 0


def _candidate_elements(ambient: AmbientGaloisField) -> Iterator[NFElement]:
    yield ambient.generator
    roots = [r for rs in ambient.roots for r in rs]
    if not roots:
        return
    for c in range(1, MAX_REDUCTION_CANDIDATES):
        alpha = ambient.field.zero
        for j, r in enumerate(roots):
            alpha = alpha + r * (c ** j)
        yield alpha


@lru_cache(maxsize=256)
def reduction_basis(ambient: AmbientGaloisField, index: int) -> Optional[ReductionBasis]:
    """The ``index``-th candidate primitive element, or None when it does not generate N."""
    candidates = _candidate_elements(ambient)
    alpha = None
    for _ in range(index + 1):
        alpha = next(candidates, None)
    if alpha is None:
        return None
    field_ = ambient.field
    minpoly = charpoly(field_.multiplication_matrix(alpha))
    if not minpoly.is_squarefree():
        return None
    powers = [alpha ** k for k in range(ambient.degree)]
    try:
        solver = ColumnSpaceSolver([a.coords for a in powers])
    except ValueError:
        return None
    images = tuple(tuple(solver.coordinates(ambient.apply(i, alpha).coords)) for i in range(ambient.order))
    return ReductionBasis(alpha, minpoly, discriminant(minpoly), solver, images)


def choose_reduction_basis(ambient: AmbientGaloisField, p: int) -> ReductionBasis:
    for index in range(MAX_REDUCTION_CANDIDATES):
        basis = reduction_basis(ambient, index)
        if basis is not None and basis.usable_at(p):
            if index:
                logger.debug(f"Using reduction candidate {index} at p = {p}")
            return basis
    raise RamifiedOrBadPrime(
        f"no primitive element with discriminant prime to {p} was found",
        {"p": p, "candidates": MAX_REDUCTION_CANDIDATES},
    )


@dataclass
class PrimeContext:
    """
    The prime ``p`` of Q together with the chosen prime of N above it, given by
    the monic irreducible factor ``factor`` of the reduction minimal polynomial mod p.
    """

    ambient: AmbientGaloisField
    p: int
    basis: ReductionBasis
    factor: GF
    all_factors: List[GF] = field(default_factory=list)

    @property
    def residue_degree(self) -> int:
        return len(self.factor) - 1

    def reduce_coordinates(self, coords: Sequence[Fraction]) -> GF:
        if not _p_integral(coords, self.p):
            raise RamifiedOrBadPrime(f"element is not integral at {self.p}", {"p": self.p})
        return gf_rem(reduce_rational_coefficients(coords, self.p), self.factor, self.p, ZZ)

    def reduce(self, a: NFElement) -> GF:
        """Image of a p-integral element of N in the residue field."""
        try:
            coords = self.basis.express(a)
        except NotInSpan:
            raise RamifiedOrBadPrime("element is not in the ambient field", {"p": self.p})
        return self.reduce_coordinates(coords)

    @cached_property
    def frobenius_of_generator(self) -> GF:
        """``t^p`` in the residue field."""
        return gf_pow_mod([1, 0], self.p, self.factor, self.p, ZZ)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "factor": list(self.factor),
            "residue_degree": self.residue_degree,
            "residue_degrees": sorted(len(g) - 1 for g in self.all_factors),
        }


def check_unramified(ambient: AmbientGaloisField, p: int):
    """Raise RamifiedOrBadPrime unless p is prime to every defining polynomial's discriminant and denominators."""
    _check_prime(p)
    for f in ambient.polys:
        details = {"p": p, "polynomial": format_polynomial(f)}
        if not _p_integral(f.coeffs, p):
            raise RamifiedOrBadPrime(f"{p} divides a denominator of a defining polynomial", details)
        if Fraction(discriminant(f)).numerator % p == 0:
            raise RamifiedOrBadPrime(f"{p} divides the discriminant of a defining polynomial", details)


def minimal_polynomial_factors(basis: ReductionBasis, p: int) -> List[GF]:
    """Monic irreducible factors of the reduction minimal polynomial mod p, in canonical order."""
    reduced = reduce_rational_coefficients(basis.minimal_polynomial.coeffs, p)
    _, factors = gf_factor(reduced, p, ZZ)
    return sorted([int(c) % p for c in g] for g, _ in factors)


def prime_context(ambient: AmbientGaloisField, p: int, factor: Optional[GF] = None) -> PrimeContext:
    check_unramified(ambient, p)
    basis = choose_reduction_basis(ambient, p)
    factors = minimal_polynomial_factors(basis, p)
    if factor is None:
        factor = factors[0]
    elif list(factor) not in factors:
        raise ValueError(f"{factor} is not an irreducible factor mod {p}")
    return PrimeContext(ambient, p, basis, list(factor), factors)


def frobenius_in_context(ctx: PrimeContext) -> int:
    """The automorphism ``s`` with ``reduce(s(alpha)) = reduce(alpha)^p`` at the context's prime."""
    target = ctx.frobenius_of_generator
    matches = [i for i, image in enumerate(ctx.basis.images) if ctx.reduce_coordinates(image) == target]
    if len(matches) != 1:
        raise RamifiedOrBadPrime(
            f"Frobenius at {ctx.p} is not unique; the prime is not usable",
            {"p": ctx.p, "candidates": matches},
        )
    return matches[0]


def frobenius_element(ambient: AmbientGaloisField, p: int) -> Tuple[PrimeContext, int]:
    """Frobenius at the canonical prime above ``p``."""
    ctx = prime_context(ambient, p)
    sigma = frobenius_in_context(ctx)
    logger.debug(f"Frobenius at {p} is automorphism {sigma} (residue degree {ctx.residue_degree})")
    return ctx, sigma


def splitting_type(ambient: AmbientGaloisField, f: Polynomial, p: int) -> List[int]:
    """Degrees of the irreducible factors of ``f`` mod p, sorted."""
    _check_prime(p)
    monic = f.monic()
    if not _p_integral(monic.coeffs, p):
        raise RamifiedOrBadPrime(f"{p} divides a denominator of {format_polynomial(f)}", {"p": p})
    if Fraction(discriminant(monic)).numerator % p == 0:
        raise RamifiedOrBadPrime(f"{p} divides the discriminant of {format_polynomial(f)}", {"p": p})
    _, factors = gf_factor(gf_from_int_poly(to_integer_coefficients(monic), p), p, ZZ)
    degrees = []
    for g, mult in factors:
        degrees.extend([len(g) - 1] * mult)
    return sorted(degrees)


def dedekind_check(ambient: AmbientGaloisField, p: int) -> bool:
    """Cycle type of Frobenius on each stored root list equals the splitting type."""
    _, sigma = frobenius_element(ambient, p)
    return all(ambient.cycle_type(sigma, k) == splitting_type(ambient, f, p) for k, f in enumerate(ambient.polys))


def ramified_primes(ambient: AmbientGaloisField) -> List[int]:
    """
    Primes rejected by :func:`check_unramified`: those dividing the discriminant
    or a coefficient denominator of some defining polynomial.

    Every prime ramified in N is among them, and every accepted prime is then
    handled with a primitive element whose minimal polynomial has discriminant
    prime to it (see :func:`choose_reduction_basis`). ``disc(m_N)`` itself is not
    consulted, so a prime dividing it only through the index of ``Z[theta]`` is
    accepted and reduced through another candidate.
    """
    bad = set()
    for f in ambient.polys:
        disc = Fraction(discriminant(f))
        if disc.numerator:
            bad.update(sympy.primefactors(abs(disc.numerator)))
        for c in f.coeffs:
            den = Fraction(c).denominator
            if den > 1:
                bad.update(sympy.primefactors(den))
    return sorted(int(q) for q in bad)


def unramified_primes(ambient: AmbientGaloisField, start: int, stop: int) -> List[int]:
    """Usable primes in ``[start, stop]``."""
    bad = set(ramified_primes(ambient))
    return [int(q) for q in sympy.primerange(start, stop + 1) if q not in bad]
