# src/algebraicgalois/tools/field_tools.py
import logging
from typing import Any, Dict, List, Optional, Sequence

from ..algebra.parsing import format_polynomial, parse_polynomial
from ..algebra.polynomial import Polynomial
from ..core.cache import load_ambient
from ..core.config import Settings
from ..galois.ambient import AmbientGaloisField, extend_ambient
from ..galois.embeddings import GaloisSubextension, embeddings, lift_subextension, subfield_subgroup
from ..galois.fixed_fields import FixedFieldBasis, fixed_field
from ..galois.subgroups import (
    Subgroup,
    all_subgroups,
    center,
    conjugacy_classes,
    element_order,
    is_abelian,
    normal_subgroups,
)
from ..groupscheme.coordinate_ring import CoordinateRing, build_coordinate_ring
from ..groupscheme.points import point_group_check, points
from ..groupscheme.restriction import embedding_independence, restriction
from ..groupscheme.tower import truncated_absolute_group
from ..utils.debug_log import debug_log

logger = logging.getLogger(__name__)


def parse_polynomials(texts: Sequence[str], max_degree: Optional[int] = None) -> List[Polynomial]:
    return [parse_polynomial(t, max_degree) for t in texts]


class FieldTools:
    """Handlers for splitting fields, groups, coordinate rings, points and restriction maps."""

    def __init__(self, settings: Settings):
        self.settings = settings
        self.cache_hits: Dict[str, bool] = {}

    def ambient(self, polys: Sequence[str]) -> AmbientGaloisField:
        parsed = parse_polynomials(polys, self.settings.max_degree)
        ambient, hit = load_ambient(parsed, self.settings.max_degree, self.settings.cache_dir)
        self.cache_hits[", ".join(format_polynomial(f) for f in ambient.polys)] = hit
        debug_log(f"ambient for {list(polys)}: degree {ambient.degree}, cache hit {hit}")
        return ambient

    def subgroup_for(self, ambient: AmbientGaloisField, spec: Optional[str]) -> Subgroup:
        """``Q``, ``N`` or a polynomial whose least root in N generates the subfield."""
        if spec is None or spec.strip().upper() in ("Q", "QQ"):
            return Subgroup.whole(ambient)
        if spec.strip().upper() == "N":
            return Subgroup.trivial(ambient)
        return subfield_subgroup(ambient, parse_polynomial(spec, self.settings.max_degree))

    def subfield(self, ambient: AmbientGaloisField, spec: Optional[str]) -> FixedFieldBasis:
        return fixed_field(self.subgroup_for(ambient, spec))

    def extension(self, ambient: AmbientGaloisField, over: Optional[str] = None) -> GaloisSubextension:
        """N/K for the requested base field K."""
        return GaloisSubextension(Subgroup.trivial(ambient), self.subgroup_for(ambient, over))

    def ring(self, polys: Sequence[str], over: Optional[str] = None) -> CoordinateRing:
        return build_coordinate_ring(self.extension(self.ambient(polys), over))

    # ------------------------------------------------------------------ tools

    def split_tool(self, **args) -> Dict[str, Any]:
        ambient = self.ambient(args["polys"])
        key = ", ".join(format_polynomial(f) for f in ambient.polys)
        return {
            "success": True,
            "degree": ambient.degree,
            "group_order": ambient.order,
            "cache_hit": self.cache_hits.get(key, False),
            "ambient": ambient.to_json(),
            "verified": {
                "group": ambient.verify_group(),
                "automorphisms": ambient.verify_automorphisms(),
                "roots": ambient.verify_roots(),
            },
        }

    def group_tool(self, **args) -> Dict[str, Any]:
        ambient = self.ambient(args["polys"])
        classes = conjugacy_classes(ambient)
        return {
            "success": True,
            "order": ambient.order,
            "abelian": is_abelian(ambient),
            "table": [list(row) for row in ambient.table],
            "classes": [
                {"members": list(c), "size": len(c), "order": element_order(ambient, c[0])} for c in classes
            ],
            "center": center(ambient).to_json(),
            "subgroups": len(all_subgroups(ambient)),
            "normal_subgroups": [h.to_json() for h in normal_subgroups(ambient)],
            "cycle_types": [
                {
                    "polynomial": format_polynomial(f),
                    "types": [ambient.cycle_type(i, k) for i in range(ambient.order)],
                }
                for k, f in enumerate(ambient.polys)
            ],
        }

    def coordinate_ring_tool(self, **args) -> Dict[str, Any]:
        ring = self.ring(args["polys"], args.get("over"))
        return {
            "success": True,
            "ring": ring.to_json(include_hopf=args.get("hopf", True)),
            "checks": {
                "equivariance": ring.equivariance_check(),
                "base_change": ring.base_change_check(),
                "abelian_collapse": ring.abelian_collapse_check(),
                **ring.hopf_axioms(),
            },
        }

    def points_tool(self, **args) -> Dict[str, Any]:
        ring = self.ring(args["polys"], args.get("over"))
        ext = ring.extension
        target = self.subfield(ring.ambient, args["at"]) if args.get("at") else ext.top
        found = points(ring, target)
        return {
            "success": True,
            "count": len(found),
            "target_degree": target.degree,
            "center_order": len(ext.center),
            "points": [x.to_json() for x in found],
            "group_law": point_group_check(ring),
        }

    def restrict_tool(self, **args) -> Dict[str, Any]:
        """
        Without ``extend``: every automorphism of N as a self-embedding, and the
        refined tower of the input polynomials. With ``extend``: every embedding of
        N into the splitting field of the input plus the extra polynomial.
        """
        ambient = self.ambient(args["polys"])
        source = self.extension(ambient, args.get("over"))
        source_ring = build_coordinate_ring(source)
        if args.get("extend"):
            cap = self.settings.max_degree
            extended, amap = extend_ambient(ambient, parse_polynomial(args["extend"], cap), cap)
            # N'/K' with K' the image of K
            dest = GaloisSubextension(Subgroup.trivial(extended), lift_subextension(amap, source).outer)
            dest_ring = build_coordinate_ring(dest)
            outcome = embedding_independence(source_ring, dest_ring, amap)
            result = {
                "target_degree": extended.degree,
                "embeddings": outcome["embeddings"],
                "identical": outcome["identical"],
                "map": outcome["map"].to_json(),
                "checks": outcome["map"].checks(),
            }
        else:
            phis = embeddings(source, ambient)
            maps = [restriction(phi, source_ring, source_ring) for phi in phis]
            eye = [[ambient.field.one if i == j else ambient.field.zero for j in range(source_ring.dim)] for i in range(source_ring.dim)]
            cap = self.settings.max_degree
            tower = truncated_absolute_group(parse_polynomials(args["polys"], cap), cap, ambient)
            result = {
                "target_degree": ambient.degree,
                "embeddings": len(phis),
                "identical": all(m.matrix == maps[0].matrix for m in maps),
                "identity": all(m.matrix == eye for m in maps),
                "tower": tower.to_json(),
                "tower_checks": tower.checks(),
            }
        return {"success": True, **result}
