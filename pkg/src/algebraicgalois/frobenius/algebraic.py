# src/algebraicgalois/frobenius/algebraic.py
"""
The algebraic Frobenius: the point of A(L/Q) given by evaluation at the
Frobenius of a prime above p, with the two exact certificates that make it
independent of the chosen prime.

- fixed: every value ``f(phi)`` is fixed by ``phi``, so the point is defined over
  the decomposition field.
- transport: ``f(s phi s^-1) = s(f(phi))`` for every s, so another prime above p
  (whose Frobenius is a conjugate) gives the same point up to the Galois action.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from ..algebra.number_field import NFElement
from ..core.errors import RamifiedOrBadPrime
from ..galois.ambient import AmbientGaloisField
from ..galois.embeddings import GaloisSubextension, identity_embedding
from ..galois.fixed_fields import FixedFieldBasis, fixed_field
from ..galois.subgroups import Subgroup, conjugacy_classes, element_order
from ..groupscheme.coordinate_ring import CoordinateRing
from ..groupscheme.points import AlgebraPoint, galois_to_point
from ..groupscheme.restriction import restriction
from .primes import PrimeContext, frobenius_element, frobenius_in_context, prime_context, unramified_primes

logger = logging.getLogger(__name__)

CHEBOTAREV_TOLERANCE = 0.15


def _require_rational_base(extension: GaloisSubextension):
    if not extension.is_over_rationals():
        raise ValueError("the algebraic Frobenius is only available over the base field Q")


def frobenius_in_quotient(sigma: int, extension: GaloisSubextension) -> int:
    """Image of an ambient automorphism in Gal(L/Q)."""
    return extension.quotient_index(sigma)


@dataclass
class FrobeniusData:
    context: PrimeContext
    sigma: int
    sigma_bar: int
    order: int
    class_id: int
    values: Tuple[NFElement, ...]
    decomposition_field: FixedFieldBasis
    certificates: Dict[str, bool] = field(default_factory=dict)

    @property
    def p(self) -> int:
        return self.context.p

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "residue_degrees": sorted(len(g) - 1 for g in self.context.all_factors),
            "sigma_index": self.sigma,
            "sigma_relative_index": self.sigma_bar,
            "order": self.order,
            "class": self.class_id,
            "decomposition_degree": self.decomposition_field.degree,
            "values": [v.to_json() for v in self.values],
            "certificates": dict(self.certificates),
        }


def _decomposition_field(ring: CoordinateRing, sigma: int) -> FixedFieldBasis:
    """L^<phi>, the fixed field of ``<phi> H`` in N."""
    ext = ring.extension
    return fixed_field(Subgroup.generated(ring.ambient, list(ext.inner.generators) + [sigma]))


def fixed_certificate(ring: CoordinateRing, sigma_bar: int, decomposition: FixedFieldBasis) -> bool:
    ext = ring.extension
    for f in ring.basis:
        value = f[sigma_bar]
        if ext.act(sigma_bar, value) != value or not decomposition.contains(value):
            return False
    return True


def transport_certificate(ring: CoordinateRing, sigma_bar: int) -> bool:
    ext = ring.extension
    for s in range(ext.degree):
        moved = ext.conjugate(s, sigma_bar)
        for f in ring.basis:
            if f[moved] != ext.act(s, f[sigma_bar]):
                return False
    return True


def _frobenius_data(ring: CoordinateRing, ctx: PrimeContext, sigma: int) -> FrobeniusData:
    ext = ring.extension
    sigma_bar = frobenius_in_quotient(sigma, ext)
    decomposition = _decomposition_field(ring, sigma)
    data = FrobeniusData(
        context=ctx,
        sigma=sigma,
        sigma_bar=sigma_bar,
        order=ext.element_order(sigma_bar),
        class_id=ext.class_of(sigma_bar),
        values=tuple(f[sigma_bar] for f in ring.basis),
        decomposition_field=decomposition,
    )
    data.certificates = {
        "fixed": fixed_certificate(ring, sigma_bar, decomposition),
        "transport": transport_certificate(ring, sigma_bar),
    }
    return data


def algebraic_frobenius(ring: CoordinateRing, p: int) -> FrobeniusData:
    """Frobenius point of A(L/Q) at the canonical prime above ``p``."""
    _require_rational_base(ring.extension)
    ctx, sigma = frobenius_element(ring.ambient, p)
    data = _frobenius_data(ring, ctx, sigma)
    logger.info(
        f"Frobenius at {p}: order {data.order}, decomposition field of degree {data.decomposition_field.degree}"
    )
    return data


def frobenius_point(ring: CoordinateRing, p: int) -> AlgebraPoint:
    data = algebraic_frobenius(ring, p)
    return galois_to_point(ring, data.sigma_bar)


def factor_choice_independence(ring: CoordinateRing, p: int) -> Dict[str, object]:
    """
    Repeat the construction for every prime above ``p``. The resulting Frobenius
    elements are conjugate and their values differ exactly by the transporting
    automorphism.
    """
    _require_rational_base(ring.extension)
    ext = ring.extension
    canonical = algebraic_frobenius(ring, p)
    conjugate_ok = True
    transport_ok = True
    for g in canonical.context.all_factors:
        ctx = prime_context(ring.ambient, p, g)
        other = _frobenius_data(ring, ctx, frobenius_in_context(ctx))
        witnesses = [s for s in range(ext.degree) if ext.conjugate(s, canonical.sigma_bar) == other.sigma_bar]
        if not witnesses:
            conjugate_ok = False
            continue
        s = witnesses[0]
        if any(v != ext.act(s, u) for u, v in zip(canonical.values, other.values)):
            transport_ok = False
    return {
        "factors": len(canonical.context.all_factors),
        "conjugate": conjugate_ok,
        "transport": transport_ok,
    }


def frobenius_compatible_with_restriction(small: CoordinateRing, large: CoordinateRing, p: int) -> bool:
    """
    ``x_N ∘ phi_* = x_L`` where ``phi`` is the inclusion L ⊆ N of two levels over
    the same ambient and ``x`` the algebraic Frobenius points.
    """
    _require_rational_base(small.extension)
    _require_rational_base(large.extension)
    inclusion = identity_embedding(small.extension)
    phi_star = restriction(inclusion, small, large)
    frob_small = algebraic_frobenius(small, p)
    frob_large = algebraic_frobenius(large, p)
    point = galois_to_point(large, frob_large.sigma_bar)
    return all(point(column) == value for column, value in zip(phi_star.columns, frob_small.values))


def chebotarev_sweep(ambient: AmbientGaloisField, primes: Sequence[int]) -> Dict[str, object]:
    """
    Frequencies of Frobenius conjugacy classes over the given primes against the
    densities ``|C|/|G|``. Deviations beyond the tolerance only produce warnings.
    """
    classes = conjugacy_classes(ambient)
    class_of = {g: idx for idx, cls in enumerate(classes) for g in cls}
    counts: Counter = Counter()
    used: List[int] = []
    skipped: List[int] = []
    for p in primes:
        try:
            _, sigma = frobenius_element(ambient, p)
        except RamifiedOrBadPrime:
            skipped.append(p)
            continue
        counts[class_of[sigma]] += 1
        used.append(p)
    total = len(used)
    rows = []
    warnings = []
    for idx, cls in enumerate(classes):
        expected = len(cls) / ambient.order
        observed = counts[idx] / total if total else 0.0
        within = abs(observed - expected) <= CHEBOTAREV_TOLERANCE
        if not within:
            message = f"class {idx} frequency {observed:.3f} deviates from {expected:.3f}"
            logger.warning(message)
            warnings.append(message)
        rows.append(
            {
                "class": idx,
                "size": len(cls),
                "order": element_order(ambient, cls[0]),
                "count": counts[idx],
                "observed": round(observed, 6),
                "expected": round(expected, 6),
                "within_tolerance": within,
            }
        )
    return {"primes": len(used), "skipped": skipped, "classes": rows, "warnings": warnings}


def sweep_range(ambient: AmbientGaloisField, start: int, stop: int) -> Dict[str, object]:
    return chebotarev_sweep(ambient, unramified_primes(ambient, start, stop))
