# src/algebraicgalois/core/errors.py
"""
Exception hierarchy shared by the computational modules, the tool handlers and the CLI.

Every domain error carries a stable machine-readable ``code`` so that the CLI can
emit a JSON error object and map it to an exit code without string matching.
"""
from typing import Any, Dict, Optional


class GaloisError(Exception):
    """Base class for all errors raised by algebraicgalois."""

    code = "galois_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "code": self.code,
            "type": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class PolynomialParseError(GaloisError, ValueError):
    """Raised when polynomial text or JSON cannot be parsed."""

    code = "polynomial_parse_error"


class DegreeCapExceeded(GaloisError):
    """The splitting field would exceed the configured degree cap."""

    code = "degree_cap_exceeded"


class NotAnEmbedding(GaloisError):
    """A proposed map does not fix the base field or is not a field homomorphism."""

    code = "not_an_embedding"


class NoEmbedding(GaloisError):
    """A minimal polynomial has no root in the requested target field."""

    code = "no_embedding"


class RamifiedOrBadPrime(GaloisError):
    """The prime divides the discriminant of the ambient modulus or a stored denominator."""

    code = "ramified_or_bad_prime"


class RamifiedInfinitePlace(GaloisError):
    """The infinite place of Q ramifies in the extension (the field is not totally real)."""

    code = "ramified_infinite_place"


class InconsistentDescent(GaloisError):
    """A descent linear system had no solution. Indicates an upstream bug."""

    code = "inconsistent_descent"


class AmbientMismatch(GaloisError):
    """Two objects that must live over the same ambient field do not."""

    code = "ambient_mismatch"


class VerificationFailed(GaloisError):
    """A blocking check of the verification suite failed."""

    code = "verification_failed"


class CorruptCache(GaloisError):
    """A cache entry could not be parsed or failed validation."""

    code = "corrupt_cache"


# Errors that the CLI reports with exit code 1.
DOMAIN_ERRORS = (
    DegreeCapExceeded,
    NotAnEmbedding,
    NoEmbedding,
    RamifiedOrBadPrime,
    RamifiedInfinitePlace,
    InconsistentDescent,
    AmbientMismatch,
    VerificationFailed,
)
