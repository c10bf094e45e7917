# src/algebraicgalois/algebra/polynomial.py
"""
Dense univariate polynomials over an exact field.

Coefficients are stored lowest degree first. The coefficient domain is implicit:
anything that supports ``+ - * /``, ``==`` and truthiness works, which in this
package means ``fractions.Fraction`` (BigRational) or ``NFElement``.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Sequence, Tuple


def _strip(coeffs: Sequence[Any]) -> Tuple[Any, ...]:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


def _as_rational(c: Any) -> Any:
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    return c


@dataclass(frozen=True)
class Polynomial:
    """An immutable dense polynomial in one variable ``x``."""

    coeffs: Tuple[Any, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(tuple(_as_rational(c) for c in self.coeffs)))

    # ------------------------------------------------------------------ constructors

    @classmethod
    def rational(cls, coeffs: Iterable[Any]) -> "Polynomial":
        """Build a polynomial over Q from ints, Fractions or decimal strings."""
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, c: Any) -> "Polynomial":
        return cls((c,))

    @classmethod
    def linear_root(cls, root: Any) -> "Polynomial":
        """The monic polynomial ``x - root``."""
        return cls((-root, root * 0 + 1))

    # ------------------------------------------------------------------ basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading(self) -> Any:
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._zero()

    def _zero(self) -> Any:
        return self.coeffs[0] * 0 if self.coeffs else Fraction(0)

    def _one(self) -> Any:
        return self._zero() + 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading == 1

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    # ------------------------------------------------------------------ ring operations

    def __add__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        return self + (-other)

    def __rsub__(self, other: Any) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        zero = self.coeffs[0] * 0
        out: List[Any] = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Polynomial(tuple(out))

    def __rmul__(self, other: Any) -> "Polynomial":
        return Polynomial(tuple(other * c for c in self.coeffs))

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial((self._one(),))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Euclidean division ``self = q * divisor + r`` with ``deg r < deg divisor``."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < divisor.degree:
            return Polynomial(), self
        rem = list(self.coeffs)
        dd = divisor.degree
        inv_lead = 1 / divisor.leading if isinstance(divisor.leading, Fraction) else divisor.leading.inverse()
        quot = [self._zero()] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv_lead
            quot[k - dd] = q
            for i, d in enumerate(divisor.coeffs):
                if d:
                    rem[k - dd + i] = rem[k - dd + i] - q * d
        return Polynomial(tuple(quot)), Polynomial(tuple(rem[:dd]))

    def __floordiv__(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod(divisor)[1]

    def exact_quotient(self, divisor: "Polynomial") -> "Polynomial":
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lead = self.leading
        if lead == 1:
            return self
        inv = 1 / lead if isinstance(lead, Fraction) else lead.inverse()
        return self * inv

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "Polynomial":
        return Polynomial(tuple(fn(c) for c in self.coeffs))

    # ------------------------------------------------------------------ evaluation and substitution

    def __call__(self, value: Any) -> Any:
        return self.evaluate(value)

    def evaluate(self, value: Any) -> Any:
        """Horner evaluation; ``value`` may live in any ring the coefficients act on."""
        if not self.coeffs:
            return value * 0
        acc = value * 0 + self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Return ``self(inner(x))``."""
        if not self.coeffs:
            return Polynomial()
        acc = Polynomial((self.coeffs[-1],))
        for c in reversed(self.coeffs[:-1]):
            acc = acc * inner + c
        return acc

    def shift(self, c: Any) -> "Polynomial":
        """Return ``self(x + c)``."""
        if not self.coeffs:
            return self
        one = self._one()
        return self.compose(Polynomial((c + self._zero(), one)))

    # ------------------------------------------------------------------ gcd family

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial", "Polynomial"]:
        """Return ``(g, s, t)`` with ``s*self + t*other = g`` and ``g`` monic."""
        one = self._one() if self.coeffs else other._one()
        r0, r1 = self, other
        s0, s1 = Polynomial((one,)), Polynomial()
        t0, t1 = Polynomial(), Polynomial((one,))
        while r1:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0:
            return r0, s0, t0
        lead = r0.leading
        inv = 1 / lead if isinstance(lead, Fraction) else lead.inverse()
        return r0 * inv, s0 * inv, t0 * inv

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree <= 0

    def squarefree_part(self) -> "Polynomial":
        if self.degree <= 0:
            return self.monic()
        return self.exact_quotient(self.gcd(self.derivative())).monic()

    def squarefree_decomposition(self) -> List[Tuple["Polynomial", int]]:
        """Yun's algorithm (characteristic zero). Factors are monic; the unit is dropped."""
        f = self.monic()
        if f.degree <= 0:
            return []
        out: List[Tuple[Polynomial, int]] = []
        df = f.derivative()
        a = f.gcd(df)
        b = f.exact_quotient(a)
        c = df.exact_quotient(a)
        d = c - b.derivative()
        k = 1
        while b.degree > 0:
            g = b.gcd(d)
            if g.degree > 0:
                out.append((g, k))
            b = b.exact_quotient(g)
            c = d.exact_quotient(g)
            d = c - b.derivative()
            k += 1
        return out

    # ------------------------------------------------------------------ presentation

    def sort_key(self) -> Tuple[int, Tuple[Any, ...]]:
        return (self.degree, tuple(self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({list(str(c) for c in self.coeffs)})"


def resultant(f: Polynomial, g: Polynomial) -> Any:
    """
    Resultant of two polynomials over a field, by the Euclidean algorithm.

    Equals the determinant of the Sylvester matrix. Returns zero when either input
    is zero; for two nonzero constants it is 1.
    """
    if f.is_zero() or g.is_zero():
        zero = (f.coeffs or g.coeffs or (Fraction(0),))[0] * 0
        return zero
    one = f._one()
    sign = one
    scale = one
    a, b = f, g
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return sign * scale * (b.leading ** m)
        if m == 0:
            return sign * scale * (a.leading ** n)
        r = a % b
        if r.is_zero():
            return a._zero()
        # Res(a, b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
        if (m * n) % 2:
            sign = -sign
        scale = scale * (b.leading ** (m - r.degree))
        a, b = b, r


def discriminant(f: Polynomial) -> Any:
    """Discriminant ``(-1)^{n(n-1)/2} Res(f, f') / lc(f)``."""
    n = f.degree
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / f.leading
