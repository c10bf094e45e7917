# src/algebraicgalois/algebra/number_field.py
"""
Absolute number fields Q[t]/(m) and exact arithmetic on their elements.

Elements keep integer numerators over one positive common denominator. The
``coords`` property exposes the power-basis coordinates as Fractions.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Any, Iterable, List, Sequence, Tuple

from .polynomial import Polynomial

logger = logging.getLogger(__name__)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _normalize(num: Sequence[int], den: int) -> Tuple[Tuple[int, ...], int]:
    if den < 0:
        num = [-a for a in num]
        den = -den
    g = den
    for a in num:
        if g == 1:
            break
        g = gcd(g, a)
    if not any(num):
        return tuple(0 for _ in num), 1
    if g != 1:
        return tuple(a // g for a in num), den // g
    return tuple(num), den


def _common_denominator(values: Iterable[Fraction]) -> Tuple[Tuple[int, ...], int]:
    values = [Fraction(v) for v in values]
    den = 1
    for v in values:
        den = _lcm(den, v.denominator)
    return tuple(v.numerator * (den // v.denominator) for v in values), den


@dataclass(frozen=True)
class NumberField:
    """
    The field Q[t]/(modulus). The modulus must be monic with rational coefficients;
    irreducibility is assumed by callers that build fields from minimal polynomials
    and can be confirmed with :meth:`certify`.
    """

    modulus: Polynomial

    def __post_init__(self):
        if self.modulus.degree < 1:
            raise ValueError("number field modulus must have degree >= 1")
        if not self.modulus.is_monic():
            raise ValueError("number field modulus must be monic")

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls(Polynomial.x())

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def is_rationals(self) -> bool:
        return self.degree == 1

    def certify(self) -> bool:
        """True when the modulus is irreducible over Q."""
        from .factorization import factor_over_q

        factors = factor_over_q(self.modulus)
        return len(factors) == 1 and factors[0][1] == 1

    # ------------------------------------------------------------------ reduction tables

    @cached_property
    def _reduction(self) -> Tuple[Tuple[Tuple[int, ...], ...], int]:
        """Rows ``t^k mod m`` for ``k = n .. 2n-2`` over one common denominator."""
        n = self.degree
        rows: List[List[Fraction]] = []
        t_n = [-c for c in self.modulus.coeffs[:n]]
        current = t_n
        for _ in range(n, 2 * n - 1):
            rows.append(list(current))
            top = current[-1]
            shifted = [Fraction(0)] + current[:-1]
            current = [shifted[i] + top * t_n[i] for i in range(n)]
        den = 1
        for row in rows:
            for v in row:
                den = _lcm(den, v.denominator)
        int_rows = tuple(tuple(v.numerator * (den // v.denominator) for v in row) for row in rows)
        return int_rows, den

    # ------------------------------------------------------------------ element constructors

    def element(self, coords: Sequence[Any]) -> "NFElement":
        coords = list(coords)
        if len(coords) > self.degree:
            raise ValueError(f"expected at most {self.degree} coordinates, got {len(coords)}")
        coords += [0] * (self.degree - len(coords))
        num, den = _common_denominator(coords)
        return NFElement(self, num, den)

    def from_integers(self, num: Sequence[int], den: int = 1) -> "NFElement":
        return NFElement(self, tuple(num), den)

    def rational(self, q: Any) -> "NFElement":
        q = Fraction(q)
        return NFElement(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    @cached_property
    def zero(self) -> "NFElement":
        return self.rational(0)

    @cached_property
    def one(self) -> "NFElement":
        return self.rational(1)

    @cached_property
    def generator(self) -> "NFElement":
        if self.degree == 1:
            # t = -m(0) in Q[t]/(t + m0)
            return self.rational(-self.modulus.coeffs[0] if self.modulus.coeffs else 0)
        return NFElement(self, (0, 1) + (0,) * (self.degree - 2), 1)

    def from_polynomial(self, poly: Polynomial) -> "NFElement":
        """Class of a rational polynomial in ``t`` modulo the modulus."""
        if self.degree == 1:
            return self.rational(poly.evaluate(self.generator.rational_value()) if poly else 0)
        reduced = poly % self.modulus if poly.degree >= self.degree else poly
        return self.element(reduced.coeffs)

    def power_basis(self) -> List["NFElement"]:
        return [self.generator ** k for k in range(self.degree)]

    def multiplication_matrix(self, a: "NFElement") -> List[List[Fraction]]:
        """Rational matrix (rows) of ``x -> a*x`` in the power basis."""
        columns = [(a * b).coords for b in self.power_basis()]
        return [[columns[j][i] for j in range(self.degree)] for i in range(self.degree)]

    def polynomial_over(self, poly: Polynomial) -> Polynomial:
        """Coerce a rational polynomial into one with coefficients in this field."""
        return Polynomial(tuple(self.rational(c) for c in poly.coeffs))

    def to_json(self) -> List[str]:
        return [str(c) for c in self.modulus.coeffs]

    def __repr__(self) -> str:
        return f"NumberField(degree={self.degree}, modulus={[str(c) for c in self.modulus.coeffs]})"


class NFElement:
    """An element of a :class:`NumberField`, immutable once constructed."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: NumberField, num: Sequence[int], den: int = 1):
        self.field = field
        self.num, self.den = _normalize(num, den)

    # ------------------------------------------------------------------ views

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.coords)

    def sort_key(self) -> Tuple[Fraction, ...]:
        return self.coords

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coords]

    def __bool__(self) -> bool:
        return any(self.num)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, NFElement):
            if self.num != other.num or self.den != other.den:
                return False
            return self.field is other.field or self.field == other.field
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        # agrees with __eq__ against int and Fraction
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"NFElement({[str(c) for c in self.coords]})"

    # ------------------------------------------------------------------ arithmetic

    def _coerce(self, other: Any) -> "NFElement":
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements belong to different number fields")
            return other
        return self.field.rational(other)

    def _scale(self, q: Fraction) -> "NFElement":
        return NFElement(self.field, tuple(a * q.numerator for a in self.num), self.den * q.denominator)

    def __add__(self, other: Any) -> "NFElement":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            num = list(self.num)
            den = self.den * q.denominator
            num = [a * q.denominator for a in num]
            num[0] += q.numerator * self.den
            return NFElement(self.field, num, den)
        other = self._coerce(other)
        if self.den == other.den:
            return NFElement(self.field, tuple(a + b for a, b in zip(self.num, other.num)), self.den)
        den = _lcm(self.den, other.den)
        fa, fb = den // self.den, den // other.den
        return NFElement(self.field, tuple(a * fa + b * fb for a, b in zip(self.num, other.num)), den)

    __radd__ = __add__

    def __neg__(self) -> "NFElement":
        return NFElement(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other: Any) -> "NFElement":
        return self + (-other)

    def __rsub__(self, other: Any) -> "NFElement":
        return (-self) + other

    def __mul__(self, other: Any) -> "NFElement":
        if isinstance(other, (int, Fraction)):
            return self._scale(Fraction(other))
        other = self._coerce(other)
        if other.is_rational():
            return self._scale(Fraction(other.num[0], other.den))
        if self.is_rational():
            return other._scale(Fraction(self.num[0], self.den))
        n = self.field.degree
        conv = [0] * (2 * n - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(other.num):
                    if b:
                        conv[i + j] += a * b
        rows, red_den = self.field._reduction
        out = [c * red_den for c in conv[:n]] if red_den != 1 else conv[:n]
        for k in range(n, 2 * n - 1):
            c = conv[k]
            if c:
                row = rows[k - n]
                for i in range(n):
                    if row[i]:
                        out[i] += c * row[i]
        return NFElement(self.field, out, self.den * other.den * red_den)

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self:
            raise ZeroDivisionError("inverse of zero in a number field")
        if self.is_rational():
            return self.field.rational(1 / Fraction(self.num[0], self.den))
        g, s, _ = self.to_polynomial().xgcd(self.field.modulus)
        if g.degree != 0:
            raise ZeroDivisionError("element is a zero divisor; modulus is reducible")
        return self.field.element(s.coeffs)

    def __truediv__(self, other: Any) -> "NFElement":
        if isinstance(other, (int, Fraction)):
            return self._scale(1 / Fraction(other))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Any) -> "NFElement":
        return self.inverse() * other

    def __pow__(self, k: int) -> "NFElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def trace(self) -> Fraction:
        matrix = self.field.multiplication_matrix(self)
        return sum((matrix[i][i] for i in range(self.field.degree)), Fraction(0))


class FieldMap:
    """
    A Q-algebra homomorphism ``source -> target`` given by the image of the source
    generator. Application is one integer matrix-vector product.
    """

    def __init__(self, source: NumberField, target: NumberField, image: NFElement):
        if image.field != target:
            raise ValueError("image must lie in the target field")
        self.source = source
        self.target = target
        self.image = image

    @cached_property
    def _matrix(self) -> Tuple[Tuple[Tuple[int, ...], ...], int]:
        # Column j is image^j; stored as rows of a common-denominator integer matrix.
        powers = []
        current = self.target.one
        for _ in range(self.source.degree):
            powers.append(current)
            current = current * self.image
        den = 1
        for p in powers:
            den = _lcm(den, p.den)
        cols = [tuple(a * (den // p.den) for a in p.num) for p in powers]
        rows = tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(self.target.degree))
        return rows, den

    def __call__(self, a: NFElement) -> NFElement:
        if a.is_rational():
            return self.target.rational(Fraction(a.num[0], a.den))
        rows, den = self._matrix
        out = [sum(r * x for r, x in zip(row, a.num) if x) for row in rows]
        return NFElement(self.target, out, a.den * den)

    def apply_polynomial(self, poly: Polynomial) -> Polynomial:
        return Polynomial(tuple(self(c) for c in poly.coeffs))

    def compose(self, inner: "FieldMap") -> "FieldMap":
        """``self ∘ inner``."""
        if inner.target != self.source:
            raise ValueError("maps are not composable")
        return FieldMap(inner.source, self.target, self(inner.image))

    def is_homomorphism(self) -> bool:
        return not self.source.modulus.evaluate(self.image)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FieldMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"FieldMap(degree {self.source.degree} -> {self.target.degree}, image={self.image!r})"


def integralize(modulus: Polynomial) -> Tuple[Polynomial, int]:
    """
    Rescale a monic rational polynomial to a monic integral one.

    Returns ``(m', D)`` with ``m'(x) = D^n m(x/D)``; a root ``a`` of ``m`` gives the
    root ``D*a`` of ``m'``.
    """
    n = modulus.degree
    d = 1
    for c in modulus.coeffs:
        d = _lcm(d, Fraction(c).denominator)
    if d == 1:
        return modulus, 1
    scaled = tuple(Fraction(c) * d ** (n - i) for i, c in enumerate(modulus.coeffs))
    logger.debug(f"Integralized modulus of degree {n} with scale {d}")
    return Polynomial(scaled), d
