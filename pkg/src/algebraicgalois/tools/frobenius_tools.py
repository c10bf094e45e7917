# src/algebraicgalois/tools/frobenius_tools.py
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List

from ..core.errors import RamifiedOrBadPrime
from ..frobenius.algebraic import algebraic_frobenius, chebotarev_sweep, factor_choice_independence
from ..frobenius.infinite import frobenius_at_infinity
from ..frobenius.primes import dedekind_check, ramified_primes, unramified_primes
from ..galois.embeddings import GaloisSubextension
from ..groupscheme.coordinate_ring import CoordinateRing, build_coordinate_ring
from .field_tools import FieldTools

logger = logging.getLogger(__name__)


def parse_sweep(text: str) -> range:
    """``A..B`` (inclusive) as a range; raises ValueError on anything else."""
    parts = text.split("..")
    if len(parts) != 2:
        raise ValueError(f"expected A..B, got {text!r}")
    start, stop = int(parts[0]), int(parts[1])
    if start < 2 or stop < start:
        raise ValueError(f"invalid prime range {text!r}")
    return range(start, stop + 1)


class FrobeniusTools:
    """Handlers for Frobenius elements at single primes, sweeps and the infinite place."""

    def __init__(self, fields: FieldTools):
        self.fields = fields

    def _full_ring(self, polys) -> CoordinateRing:
        ambient = self.fields.ambient(polys)
        return build_coordinate_ring(GaloisSubextension.full(ambient))

    def _record(self, ring: CoordinateRing, p: int) -> Dict[str, Any]:
        data = algebraic_frobenius(ring, p)
        record = data.to_json()
        ambient = ring.ambient
        record["cycle_types"] = [ambient.cycle_type(data.sigma, k) for k in range(len(ambient.polys))]
        record["dedekind"] = dedekind_check(ambient, p)
        return record

    def frobenius_tool(self, **args) -> Dict[str, Any]:
        ring = self._full_ring(args["polys"])
        p = int(args["prime"])
        record = self._record(ring, p)
        record["factor_choice"] = factor_choice_independence(ring, p)
        return {"success": True, "frobenius": record}

    def sweep_tool(self, **args) -> Dict[str, Any]:
        ring = self._full_ring(args["polys"])
        ambient = ring.ambient
        window = parse_sweep(args["sweep"])
        primes = unramified_primes(ambient, window.start, window.stop - 1)
        workers = max(1, int(args.get("workers") or self.fields.settings.workers))

        def run(p: int) -> Dict[str, Any]:
            try:
                return self._record(ring, p)
            except RamifiedOrBadPrime as e:
                return {"p": p, "skipped": e.to_dict()}

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                records: List[Dict[str, Any]] = list(pool.map(run, primes))
        else:
            records = [run(p) for p in primes]
        logger.info(f"Swept {len(primes)} primes in [{window.start}, {window.stop - 1}]")
        return {
            "success": True,
            "ramified": ramified_primes(ambient),
            "records": records,
            "chebotarev": chebotarev_sweep(ambient, [r["p"] for r in records if "skipped" not in r]),
        }

    def infinite_place_tool(self, **args) -> Dict[str, Any]:
        ring = self._full_ring(args["polys"])
        point = frobenius_at_infinity(ring)
        return {"success": True, "point": point.to_json(), "identity": point.images == tuple(ring.counit)}
