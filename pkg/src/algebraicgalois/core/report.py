# src/algebraicgalois/core/report.py
"""
Canonical JSON reports. Keys are sorted, rationals become ``"p/q"`` strings and
number-field elements become lists of coordinate strings, so two runs of the
same command produce the same bytes apart from the timing block.
"""
import json
import time
from contextlib import contextmanager
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterator

from ..algebra.number_field import NFElement
from ..algebra.parsing import format_polynomial
from ..algebra.polynomial import Polynomial

SCHEMA_VERSION = "1.0"


def to_jsonable(value: Any) -> Any:
    """Recursively convert results into plain JSON values."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return round(value, 6)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, NFElement):
        return value.to_json()
    if isinstance(value, Polynomial):
        return format_polynomial(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return to_jsonable(value.to_json())
    if is_dataclass(value):
        return to_jsonable(asdict(value))
    raise TypeError(f"cannot serialize {type(value).__name__}")


class PhaseTimer:
    """Wall-clock milliseconds per named phase."""

    def __init__(self):
        self.phases: Dict[str, float] = {}

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.phases[name] = self.phases.get(name, 0.0) + (time.perf_counter() - start) * 1000.0


def build_report(command: Dict[str, Any], results: Any, timing: Dict[str, float] = None) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": to_jsonable(command),
        "results": to_jsonable(results),
        "timing": {k: round(v, 3) for k, v in (timing or {}).items()},
    }


def dumps_report(report: Dict[str, Any], include_timing: bool = True) -> str:
    if not include_timing:
        report = {k: v for k, v in report.items() if k != "timing"}
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
