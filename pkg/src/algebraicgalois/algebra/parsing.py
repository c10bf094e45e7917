# src/algebraicgalois/algebra/parsing.py
"""
Text and JSON forms of rational polynomials in one variable ``x``.

Accepted text: ``x^3 - 2``, ``2*x^4 + x - 3/2``, ``(x^2+1)*(x-1)``.
Accepted JSON: ``{"coeffs": ["-2", "0", "0", "1"]}`` (lowest degree first).
"""
import json
import re
from fractions import Fraction
from typing import Any, List, Optional, Union

import sympy
from sympy.polys.polyerrors import BasePolynomialError
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from ..core.errors import PolynomialParseError
from .polynomial import Polynomial

_X = sympy.Symbol("x")
_ALLOWED = re.compile(r"^[0-9x+\-*/^()\s]+$")
_TRANSFORMATIONS = standard_transformations + (convert_xor, implicit_multiplication)

MAX_TEXT_LENGTH = 4096
# inputs may exceed the splitting-field cap (products of small factors), but not by more than this
INPUT_DEGREE_FACTOR = 10
DEFAULT_INPUT_DEGREE = 240


def input_degree_limit(max_degree: Optional[int] = None) -> int:
    """Largest accepted input degree for a splitting-field cap of ``max_degree``."""
    if max_degree is None:
        return DEFAULT_INPUT_DEGREE
    return INPUT_DEGREE_FACTOR * max(max_degree, 1)


def _degree_bound(expr: sympy.Expr, limit: int, source: str) -> int:
    """
    Upper bound for the degree in ``x`` of an unevaluated expression. Exponents must
    be integer literals no larger than ``limit``, so nothing huge is ever expanded.
    """
    if expr == _X:
        return 1
    if expr.is_Number:
        return 0
    if isinstance(expr, sympy.Pow):
        base, exp = expr.args
        if not exp.is_Integer or abs(int(exp)) > limit:
            raise PolynomialParseError(f"exponent {exp} is not an integer of size at most {limit}", {"input": source})
        bound = _degree_bound(base, limit, source)
        return bound * int(exp) if bound and int(exp) > 0 else bound
    if isinstance(expr, sympy.Add):
        return max(_degree_bound(a, limit, source) for a in expr.args)
    if isinstance(expr, sympy.Mul):
        return sum(_degree_bound(a, limit, source) for a in expr.args)
    raise PolynomialParseError(f"unsupported expression {expr}", {"input": source})


def _check_degree(f: Polynomial, limit: int, source: str) -> Polynomial:
    if f.degree > limit:
        raise PolynomialParseError(
            f"polynomial degree {f.degree} exceeds the input limit of {limit}", {"input": source, "limit": limit}
        )
    return f


def _parse_json(data: Any, source: str) -> Polynomial:
    if not isinstance(data, dict) or "coeffs" not in data or not isinstance(data["coeffs"], list):
        raise PolynomialParseError("JSON polynomial must be an object with a 'coeffs' list", {"input": source})
    try:
        coeffs = [Fraction(str(c)) for c in data["coeffs"]]
    except (ValueError, ZeroDivisionError) as e:
        raise PolynomialParseError(f"invalid coefficient: {e}", {"input": source})
    return Polynomial(tuple(coeffs))


def parse_polynomial(text: Union[str, dict], max_degree: Optional[int] = None) -> Polynomial:
    """
    Parse a rational polynomial; raises PolynomialParseError on anything else.

    Inputs whose degree exceeds ``input_degree_limit(max_degree)`` are rejected before
    any expansion happens.
    """
    limit = input_degree_limit(max_degree)
    if isinstance(text, dict):
        return _check_degree(_parse_json(text, json.dumps(text)), limit, json.dumps(text))
    source = text.strip()
    if not source:
        raise PolynomialParseError("empty polynomial", {"input": text})
    if len(source) > MAX_TEXT_LENGTH:
        raise PolynomialParseError(f"polynomial text longer than {MAX_TEXT_LENGTH} characters", {"input": source[:80]})
    if source.startswith("{"):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as e:
            raise PolynomialParseError(f"invalid JSON polynomial: {e}", {"input": text})
        return _check_degree(_parse_json(data, source), limit, source)
    if not _ALLOWED.match(source):
        raise PolynomialParseError(
            "polynomial may only contain integers, 'x', + - * / ^ and parentheses", {"input": text}
        )
    try:
        tree = parse_expr(source, local_dict={"x": _X}, transformations=_TRANSFORMATIONS, evaluate=False)
    except (SyntaxError, TypeError, ValueError, ZeroDivisionError, sympy.SympifyError) as e:
        raise PolynomialParseError(f"could not parse polynomial: {e}", {"input": text})
    bound = _degree_bound(tree, limit, source)
    if bound > limit:
        raise PolynomialParseError(
            f"polynomial degree may reach {bound}, above the input limit of {limit}", {"input": source, "limit": limit}
        )
    try:
        expr = parse_expr(source, local_dict={"x": _X}, transformations=_TRANSFORMATIONS, evaluate=True)
        poly = sympy.Poly(expr, _X, domain="QQ")
    except (SyntaxError, TypeError, ValueError, ZeroDivisionError, sympy.SympifyError, BasePolynomialError) as e:
        raise PolynomialParseError(f"could not parse polynomial: {e}", {"input": text})
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return Polynomial(tuple(coeffs))


def _format_coefficient(c: Fraction) -> str:
    return str(c)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form, highest degree first, e.g. ``x^3 - 2``."""
    if f.is_zero():
        return "0"
    parts: List[str] = []
    for k in range(f.degree, -1, -1):
        c = Fraction(f.coeffs[k])
        if not c:
            continue
        negative = c < 0
        a = -c if negative else c
        if k == 0:
            body = _format_coefficient(a)
        else:
            power = "x" if k == 1 else f"x^{k}"
            body = power if a == 1 else f"{_format_coefficient(a)}*{power}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)

