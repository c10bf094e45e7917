# src/algebraicgalois/toolkit.py
import logging
from typing import Any, Callable, Dict

from .core.config import Settings
from .core.errors import GaloisError
from .core.jobs import JobManager
from .tools.check_suite import SUITES, CheckSuite
from .tools.field_tools import FieldTools
from .tools.frobenius_tools import FrobeniusTools
from .tools.motive_tools import MotiveTools
from .utils.debug_log import debug_log

logger = logging.getLogger(__name__)

_POLYS = {"type": "array", "items": {"type": "string"}, "description": "Defining polynomials of the ambient field."}
_OVER = {"type": "string", "description": "Base field: Q, N, or a polynomial whose root in N generates it.", "default": "Q"}


class GaloisToolkit:
    """
    Orchestrates the tool handlers behind every CLI subcommand.

    Each tool takes keyword arguments and returns a JSON-able dictionary:
    ``{"success": True, ...}`` on success, ``{"error": {...}}`` when a domain error
    was raised.
    """

    def __init__(self, settings: Settings = None):
        self.settings = settings or Settings.from_env()
        self.job_manager = JobManager()
        self.field_tools = FieldTools(self.settings)
        self.frobenius_tools = FrobeniusTools(self.field_tools)
        self.motive_tools = MotiveTools(self.field_tools)
        self.check_suite = CheckSuite(self.field_tools, self.job_manager)
        self._init_tools()

    def _init_tools(self):
        """Defines the tool manifest shown by ``list``."""
        self.tools = {
            "split": {
                "name": "split",
                "description": "Build the splitting field of the polynomials with its automorphism group and stored roots.",
                "inputSchema": {"type": "object", "properties": {"polys": _POLYS}, "required": ["polys"]},
            },
            "group": {
                "name": "group",
                "description": "Multiplication table, conjugacy classes, center, normal subgroups and cycle types of Gal(N/Q).",
                "inputSchema": {"type": "object", "properties": {"polys": _POLYS}, "required": ["polys"]},
            },
            "coordinate_ring": {
                "name": "coordinate_ring",
                "description": "The coordinate ring A(N/K) with its Hopf structure and the exact checks of its axioms.",
                "inputSchema": {
                    "type": "object",
                    "properties": {"polys": _POLYS, "over": _OVER, "hopf": {"type": "boolean", "default": True}},
                    "required": ["polys"],
                },
            },
            "points": {
                "name": "points",
                "description": "K-algebra homomorphisms A(N/K) -> M for a subfield M, and the point group law.",
                "inputSchema": {
                    "type": "object",
                    "properties": {"polys": _POLYS, "over": _OVER, "at": {"type": "string", "description": "Target subfield M."}},
                    "required": ["polys"],
                },
            },
            "restrict": {
                "name": "restrict",
                "description": "Restriction maps induced by every embedding, compared exactly; the refined tower without --extend.",
                "inputSchema": {
                    "type": "object",
                    "properties": {"polys": _POLYS, "over": _OVER, "extend": {"type": "string"}},
                    "required": ["polys"],
                },
            },
            "frobenius": {
                "name": "frobenius",
                "description": "Algebraic Frobenius at a prime with its fixedness and transport certificates.",
                "inputSchema": {
                    "type": "object",
                    "properties": {"polys": _POLYS, "prime": {"type": "integer"}},
                    "required": ["polys", "prime"],
                },
            },
            "frobenius_sweep": {
                "name": "frobenius_sweep",
                "description": "Frobenius records over a range of primes A..B with Chebotarev class frequencies.",
                "inputSchema": {
                    "type": "object",
                    "properties": {"polys": _POLYS, "sweep": {"type": "string"}, "workers": {"type": "integer"}},
                    "required": ["polys", "sweep"],
                },
            },
            "frobenius_infinity": {
                "name": "frobenius_infinity",
                "description": "Frobenius at the infinite place; fails unless the field is totally real.",
                "inputSchema": {"type": "object", "properties": {"polys": _POLYS}, "required": ["polys"]},
            },
            "motive": {
                "name": "motive",
                "description": "Artin motive of a finite étale scheme (or the regular motive) with sections and realizations.",
                "inputSchema": {
                    "type": "object",
                    "properties": {
                        "polys": _POLYS,
                        "schemes": {"type": "array", "items": {"type": "string"}},
                        "regular": {"type": "boolean", "default": False},
                        "report": {"type": "boolean", "default": False},
                    },
                    "required": ["polys"],
                },
            },
            "dr": {
                "name": "dr",
                "description": "de Rham realization of a motive with its comodule structure over A(N/Q).",
                "inputSchema": {
                    "type": "object",
                    "properties": {
                        "polys": _POLYS,
                        "schemes": {"type": "array", "items": {"type": "string"}},
                        "regular": {"type": "boolean", "default": False},
                    },
                    "required": ["polys"],
                },
            },
            "check": {
                "name": "check",
                "description": "Run the verification suites end to end.",
                "inputSchema": {
                    "type": "object",
                    "properties": {"suite": {"type": "string", "enum": ["all", *SUITES]}, "workers": {"type": "integer"}},
                },
            },
        }

    def check_tool(self, **args) -> Dict[str, Any]:
        workers = int(args.get("workers") or self.settings.workers)
        return {"success": True, **self.check_suite.run(args.get("suite", "all"), workers)}

    def handle_tool_call(self, tool_name: str, args: Dict[str, Any]) -> Dict[str, Any]:
        """
        Routes a tool call to the appropriate handler.

        Returns:
            The handler's result, or ``{"error": ...}`` for unknown tools and domain errors.
        """
        tool_map: Dict[str, Callable[..., Dict[str, Any]]] = {
            "split": self.field_tools.split_tool,
            "group": self.field_tools.group_tool,
            "coordinate_ring": self.field_tools.coordinate_ring_tool,
            "points": self.field_tools.points_tool,
            "restrict": self.field_tools.restrict_tool,
            "frobenius": self.frobenius_tools.frobenius_tool,
            "frobenius_sweep": self.frobenius_tools.sweep_tool,
            "frobenius_infinity": self.frobenius_tools.infinite_place_tool,
            "motive": self.motive_tools.motive_tool,
            "dr": self.motive_tools.dr_tool,
            "check": self.check_tool,
        }
        handler = tool_map.get(tool_name)
        if handler is None:
            return {"error": {"code": "unknown_tool", "type": "UnknownTool", "message": f"Unknown tool: {tool_name}", "details": {}}}
        debug_log(f"tool call {tool_name} {args}")
        try:
            return handler(**args)
        except GaloisError as e:
            logger.error(f"{tool_name} failed: {e.message}")
            return {"error": e.to_dict()}
