# src/algebraicgalois/tools/motive_tools.py
import logging
from typing import Any, Dict, Optional, Sequence

from ..algebra.parsing import parse_polynomial
from ..core.errors import VerificationFailed
from ..galois.ambient import AmbientGaloisField
from ..motives.motive import (
    EtaleScheme,
    finite_type_level,
    motive_of,
    regular_motive,
    sections_by_subgroup,
    unit_motive,
)
from ..motives.realizations import de_rham, gamma_comparison
from .field_tools import FieldTools

logger = logging.getLogger(__name__)


class MotiveTools:
    """Handlers for permutation motives and their realizations."""

    def __init__(self, fields: FieldTools):
        self.fields = fields

    def scheme(self, ambient: AmbientGaloisField, schemes: Sequence[str]) -> EtaleScheme:
        """The disjoint union of ``Spec Q[x]/(f_i)`` over the given components, repeats included."""
        cap = self.fields.settings.max_degree
        parts = [EtaleScheme.from_polynomial(ambient, parse_polynomial(text, cap)) for text in schemes]
        scheme = parts[0]
        for part in parts[1:]:
            scheme = scheme.disjoint_union(part)
        return scheme

    def motive(self, ambient: AmbientGaloisField, schemes: Optional[Sequence[str]], regular: bool) -> tuple:
        if regular:
            return regular_motive(ambient), None
        if schemes:
            scheme = self.scheme(ambient, schemes)
            return motive_of(scheme), scheme
        return unit_motive(ambient), None

    def motive_tool(self, **args) -> Dict[str, Any]:
        ambient = self.fields.ambient(args["polys"])
        v, scheme = self.motive(ambient, args.get("schemes"), args.get("regular", False))
        if not v.is_homomorphism():
            raise VerificationFailed("action is not a group homomorphism")
        result: Dict[str, Any] = {"success": True, "dim": v.dim, "motive": v.to_json()}
        if scheme is not None:
            result["orbits"] = [list(o) for o in scheme.orbits()]
            result["scheme"] = scheme.to_json()
        if args.get("report"):
            dr = de_rham(v)
            kernel, stable = finite_type_level(v)
            result["sections_by_subfield"] = sections_by_subgroup(v)
            result["dr_dim"] = dr.dim
            result["comodule_ok"] = all(dr.comodule_checks().values())
            result["kernel"] = kernel.to_json()
            result["finite_type"] = stable
            if scheme is not None:
                comparison = gamma_comparison(scheme)
                result["gamma"] = comparison
                result["gamma_iso_ok"] = comparison["ok"]
        return result

    def dr_tool(self, **args) -> Dict[str, Any]:
        ambient = self.fields.ambient(args["polys"])
        v, _ = self.motive(ambient, args.get("schemes"), args.get("regular", False))
        dr = de_rham(v)
        return {
            "success": True,
            "dim": dr.dim,
            "realization": dr.to_json(),
            "coaction": [[[c.to_json() for c in coords] for coords in row] for row in dr.coaction],
            "checks": dr.comodule_checks(),
        }
