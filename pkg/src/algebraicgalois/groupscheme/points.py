# src/algebraicgalois/groupscheme/points.py
"""
Points of the algebraic Galois group: K-algebra homomorphisms A(L/K) -> M for
subfields K ⊆ M ⊆ N, with the group law coming from the Hopf structure.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..algebra.number_field import NFElement
from ..core.errors import AmbientMismatch, VerificationFailed
from ..galois.fixed_fields import FixedFieldBasis
from .coordinate_ring import CoordinateRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AlgebraPoint:
    """``images[j]`` is the value of the j-th basis function under the homomorphism."""

    ring: CoordinateRing
    target: FixedFieldBasis
    images: Tuple[NFElement, ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraPoint):
            return NotImplemented
        return self.ring is other.ring and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __call__(self, coords) -> NFElement:
        value = self.ring.ambient.field.zero
        for c, x in zip(coords, self.images):
            if c and x:
                value = value + c * x
        return value

    def is_homomorphism(self) -> bool:
        ring = self.ring
        if self(ring.unit) != 1:
            return False
        for j in range(ring.dim):
            for k in range(j, ring.dim):
                if self(ring.structure_constants[j][k]) != self.images[j] * self.images[k]:
                    return False
        return True

    def lies_in_target(self) -> bool:
        return all(self.target.contains(x) for x in self.images)

    def to_json(self) -> dict:
        return {
            "images": [x.to_json() for x in self.images],
            "target_degree": self.target.degree,
            "target_minimal_polynomial": [str(c) for c in self.target.minimal_polynomial.coeffs],
        }


def galois_to_point(ring: CoordinateRing, s: int) -> AlgebraPoint:
    """Evaluation at ``s``: the L-point ``f -> f(s)``."""
    return AlgebraPoint(ring, ring.extension.top, tuple(f[s] for f in ring.basis))


def counit_point(ring: CoordinateRing) -> AlgebraPoint:
    return AlgebraPoint(ring, ring.extension.base, tuple(ring.counit))


def _check_compatible(x: AlgebraPoint, y: AlgebraPoint):
    if x.ring is not y.ring:
        raise AmbientMismatch("points belong to different coordinate rings")


def point_mul(x: AlgebraPoint, y: AlgebraPoint) -> AlgebraPoint:
    """Convolution ``(x * y)(a) = (x ⊗ y)(Delta a)``."""
    _check_compatible(x, y)
    ring = x.ring
    zero = ring.ambient.field.zero
    images = []
    for d_m in ring.comultiplication:
        value = zero
        for p, row in enumerate(d_m):
            if not x.images[p]:
                continue
            for q, c in enumerate(row):
                if c and y.images[q]:
                    value = value + c * x.images[p] * y.images[q]
        images.append(value)
    target = x.target if x.target.degree >= y.target.degree else y.target
    return AlgebraPoint(ring, target, tuple(images))


def point_inv(x: AlgebraPoint) -> AlgebraPoint:
    """``x ∘ S``."""
    ring = x.ring
    antipode = ring.antipode
    images = tuple(x([antipode[i][j] for i in range(ring.dim)]) for j in range(ring.dim))
    return AlgebraPoint(ring, x.target, images)


def apply_automorphism(phi: int, x: AlgebraPoint) -> AlgebraPoint:
    """``phi ∘ x`` for ``phi`` in the relative group acting on the values."""
    ring = x.ring
    images = tuple(ring.extension.act(phi, v) for v in x.images)
    return AlgebraPoint(ring, x.target, images)


def conjugation_diagram_check(ring: CoordinateRing, phi: int, s: int) -> bool:
    """``phi ∘ ev_s == ev_(phi s phi^-1)``."""
    ext = ring.extension
    return apply_automorphism(phi, galois_to_point(ring, s)) == galois_to_point(ring, ext.conjugate(phi, s))


def points(ring: CoordinateRing, target: Optional[FixedFieldBasis] = None) -> List[AlgebraPoint]:
    """
    All K-algebra homomorphisms ``A(L/K) -> M``, sorted by image coordinates.

    Candidates are ``f -> psi(f(t))`` for ``t`` in the relative group and ``psi``
    a K-embedding of L into N; over N there are exactly ``[L:K]`` of them.
    """
    ext = ring.extension
    ambient = ring.ambient
    if target is None:
        target = ext.top
    if not target.subgroup.is_subgroup_of(ext.outer):
        raise AmbientMismatch("target field does not contain the base field")
    psis = ext.inner.coset_representatives(ext.outer)
    seen: Dict[Tuple[NFElement, ...], None] = {}
    for t in range(ext.degree):
        for psi in psis:
            images = tuple(ambient.apply(psi, f[t]) for f in ring.basis)
            seen.setdefault(images, None)
    if len(seen) != ring.dim:
        raise VerificationFailed(
            "number of points over the ambient differs from the ring dimension",
            {"points": len(seen), "dim": ring.dim},
        )
    out = [
        AlgebraPoint(ring, target, images)
        for images in seen
        if all(target.contains(v) for v in images)
    ]
    out.sort(key=lambda x: tuple(v.sort_key() for v in x.images))
    logger.debug(f"{len(out)} of {len(seen)} points lie in a subfield of degree {target.degree}")
    return out


def base_points(ring: CoordinateRing) -> List[AlgebraPoint]:
    return points(ring, ring.extension.base)


def point_group_check(ring: CoordinateRing) -> Dict[str, bool]:
    """
    Evaluation points against the relative group: bijective onto the L-points,
    multiplicative, with the counit as identity and the antipode as inverse.
    """
    ext = ring.extension
    evals = [galois_to_point(ring, s) for s in range(ext.degree)]
    l_points = set(points(ring, ext.top))
    identity = counit_point(ring)
    return {
        "bijective": len(set(evals)) == ext.degree and set(evals) == l_points,
        "multiplicative": all(
            point_mul(evals[s], evals[t]) == evals[ext.mul(s, t)]
            for s in range(ext.degree)
            for t in range(ext.degree)
        ),
        "identity": evals[ext.identity] == identity
        and all(point_mul(x, identity) == x for x in evals),
        "inverse": all(point_mul(x, point_inv(x)) == identity for x in evals),
        "homomorphisms": all(x.is_homomorphism() for x in evals),
    }
