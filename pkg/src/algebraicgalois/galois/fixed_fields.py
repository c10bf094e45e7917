# src/algebraicgalois/galois/fixed_fields.py
"""
Fixed fields N^H of subgroups, with a primitive element and its minimal polynomial.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Tuple

from ..algebra.linalg import ColumnSpaceSolver, NotInSpan, nullspace
from ..algebra.number_field import FieldMap, NFElement, NumberField
from ..algebra.polynomial import Polynomial
from ..core.errors import InconsistentDescent, VerificationFailed
from .ambient import AmbientGaloisField
from .subgroups import Subgroup

logger = logging.getLogger(__name__)

MAX_PRIMITIVE_ATTEMPTS = 64


@dataclass(frozen=True, eq=False)
class FixedFieldBasis:
    """
    ``N^H`` for a subgroup ``H``. ``subspace`` is the reduced-echelon Q-basis of the
    fixed vectors; ``basis`` is the power basis of ``primitive``, whose minimal
    polynomial over Q is ``minimal_polynomial``.
    """

    subgroup: Subgroup
    subspace: Tuple[NFElement, ...]
    primitive: NFElement
    minimal_polynomial: Polynomial

    @property
    def ambient(self) -> AmbientGaloisField:
        return self.subgroup.ambient

    @property
    def degree(self) -> int:
        return len(self.subspace)

    @cached_property
    def basis(self) -> Tuple[NFElement, ...]:
        return tuple(self.primitive ** k for k in range(self.degree))

    @cached_property
    def abstract_field(self) -> NumberField:
        """The field Q[t]/(minimal polynomial) that this subfield is isomorphic to."""
        return NumberField(self.minimal_polynomial)

    @cached_property
    def inclusion(self) -> FieldMap:
        return FieldMap(self.abstract_field, self.ambient.field, self.primitive)

    @cached_property
    def _solver(self) -> ColumnSpaceSolver:
        return ColumnSpaceSolver([b.coords for b in self.basis])

    def contains(self, a: NFElement) -> bool:
        return all(self.ambient.apply(g, a) == a for g in self.subgroup.generators)

    def coordinates(self, a: NFElement) -> List[Fraction]:
        """Q-coordinates of ``a`` in the power basis of the primitive element."""
        try:
            return self._solver.coordinates(a.coords)
        except NotInSpan:
            raise InconsistentDescent("element does not lie in the fixed field")

    def to_abstract(self, a: NFElement) -> NFElement:
        return self.abstract_field.element(self.coordinates(a))

    def stabilizer(self) -> Subgroup:
        """Automorphisms fixing the field pointwise (the Galois correspondence)."""
        members = tuple(
            i for i in range(self.ambient.order) if self.ambient.apply(i, self.primitive) == self.primitive
        )
        return Subgroup(self.ambient, members)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "subgroup": self.subgroup.to_json(),
            "primitive": self.primitive.to_json(),
            "minimal_polynomial": [str(c) for c in self.minimal_polynomial.coeffs],
        }


def _fixed_subspace(subgroup: Subgroup) -> List[List[Fraction]]:
    ambient = subgroup.ambient
    n = ambient.degree
    rows: List[List[Fraction]] = []
    for g in subgroup.generators:
        m = ambient.rational_matrices[g]
        for i in range(n):
            row = list(m[i])
            row[i] -= 1
            if any(row):
                rows.append(row)
    if not rows:
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return nullspace(rows, n)


def _orbit(ambient: AmbientGaloisField, a: NFElement) -> List[NFElement]:
    seen = {}
    for i in range(ambient.order):
        v = ambient.apply(i, a)
        seen.setdefault(v, None)
    return list(seen)


def _candidates(vectors: List[NFElement], field: NumberField):
    """Deterministic combinations ``b1 + c*b2 + c^2*b3 + ...``, then the vectors themselves."""
    for c in range(1, MAX_PRIMITIVE_ATTEMPTS + 1):
        z = field.zero
        for k, v in enumerate(vectors):
            z = z + v * (c ** k)
        yield z


def fixed_field(subgroup: Subgroup) -> FixedFieldBasis:
    """The fixed field of ``subgroup`` with a primitive element of degree ``[G:H]``."""
    ambient = subgroup.ambient
    field = ambient.field
    vectors = [field.element(v) for v in _fixed_subspace(subgroup)]
    index = ambient.order // subgroup.order
    if len(vectors) != index:
        raise VerificationFailed(
            "fixed subspace dimension differs from the subgroup index",
            {"dimension": len(vectors), "index": index},
        )
    if index == 1:
        return FixedFieldBasis(subgroup, tuple(vectors), field.zero, Polynomial.x())
    if subgroup.order == 1:
        return FixedFieldBasis(subgroup, tuple(vectors), field.generator, field.modulus)

    primitive: Optional[NFElement] = None
    orbit: List[NFElement] = []
    # Skip the constant vector so that the primitive element is not shifted by a rational.
    non_constant = [v for v in vectors if not v.is_rational()]
    for z in _candidates(non_constant, field):
        orbit = _orbit(ambient, z)
        if len(orbit) == index:
            primitive = z
            break
    if primitive is None:
        raise VerificationFailed("no primitive element found for the fixed field")

    minpoly = Polynomial((field.one,))
    for v in orbit:
        minpoly = minpoly * Polynomial.linear_root(v)
    minpoly = Polynomial(tuple(c.rational_value() for c in minpoly.coeffs))
    logger.debug(f"Fixed field of a subgroup of order {subgroup.order} has degree {index}")
    return FixedFieldBasis(subgroup, tuple(vectors), primitive, minpoly)

