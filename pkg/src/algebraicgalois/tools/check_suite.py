# src/algebraicgalois/tools/check_suite.py
"""
The verification driver behind ``check``. Every check is a job with a
deterministic id ``<suite>/<name>``; blocking checks fail the run, the
statistical Chebotarev check only warns.
"""
import json
import logging
import random
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime
from fractions import Fraction
from typing import Any, Callable, Dict, List, Sequence, Tuple

from ..algebra.factorization import factor_over_nf, factor_over_q, norm
from ..algebra.number_field import NumberField
from ..algebra.parsing import format_polynomial, parse_polynomial
from ..algebra.polynomial import Polynomial, resultant
from ..core.errors import DegreeCapExceeded, GaloisError, RamifiedInfinitePlace, RamifiedOrBadPrime
from ..core.jobs import JobManager, JobStatus
from ..frobenius.algebraic import (
    algebraic_frobenius,
    factor_choice_independence,
    frobenius_compatible_with_restriction,
    sweep_range,
)
from ..frobenius.infinite import frobenius_at_infinity
from ..frobenius.primes import dedekind_check, frobenius_element, splitting_type
from ..galois.ambient import AmbientGaloisField, ambient_map, extend_ambient, splitting_field
from ..galois.embeddings import GaloisSubextension, embeddings
from ..galois.fixed_fields import fixed_field
from ..galois.subgroups import Subgroup, all_subgroups, conjugacy_classes, normal_subgroups
from ..groupscheme.coordinate_ring import CoordinateRing, build_coordinate_ring
from ..groupscheme.points import base_points, conjugation_diagram_check, point_group_check
from ..groupscheme.restriction import embedding_independence, restriction
from ..groupscheme.tower import truncated_absolute_group
from ..motives.motive import (
    EtaleScheme,
    Motive,
    finite_type_level,
    hom_dimension,
    hom_motives,
    irreducible_constituents,
    motive_of,
    orbit_count,
    product_check,
    regular_motive,
    sections,
    sheaf_axiom_check,
    unit_motive,
)
from ..motives.realizations import comodule_homs, de_rham, gamma_comparison, tensor_compatibility
from .field_tools import FieldTools

logger = logging.getLogger(__name__)

SUITES = ("algebra", "galois", "groupscheme", "frobenius", "motives", "cli")

SQRT2 = ("x^2 - 2",)
CUBE_ROOT2 = ("x^3 - 2",)
COMPOSITUM = ("x^3 - 2", "x^2 - 2")
CYCLIC_QUARTIC = ("x^4 - 5*x^2 + 5",)
REDUCIBLE = ("x^4 - 1", "x^3 - 2*x^2 - x + 2")
SUITE_AMBIENTS = (SQRT2, CUBE_ROOT2, COMPOSITUM, CYCLIC_QUARTIC)

DIVMOD_SEED = 1729
DIVMOD_TRIALS = 40
# factoring m_N over N costs a degree (deg N)^2 factorization over Q
FACTOR_CHECK_DEGREE = 6

FROBENIUS_PRIMES = (5, 7, 11, 13, 31)
EXPECTED_CYCLE_TYPES = {5: [1, 2], 7: [3], 31: [1, 1, 1]}
CHEBOTAREV_RANGE = (2, 500)


@dataclass
class Check:
    suite: str
    name: str
    fn: Callable[[], Dict[str, Any]]
    blocking: bool = True


def _poly(text: str) -> Polynomial:
    return parse_polynomial(text)


def random_polynomial(rng: random.Random, max_degree: int = 6) -> Polynomial:
    """A nonzero rational polynomial of degree at most ``max_degree``."""
    degree = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(degree)]
    coeffs.append(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4)))
    return Polynomial(tuple(coeffs))


def random_pairs(seed: int, count: int) -> List[Tuple[Polynomial, Polynomial]]:
    rng = random.Random(seed)
    return [(random_polynomial(rng), random_polynomial(rng)) for _ in range(count)]


class CheckSuite:
    """Runs the named suites through a JobManager."""

    def __init__(self, fields: FieldTools, job_manager: JobManager = None):
        self.fields = fields
        self.job_manager = job_manager or JobManager()
        self._ambients: Dict[Tuple[str, ...], AmbientGaloisField] = {}
        self._lock = threading.Lock()

    def ambient(self, polys: Sequence[str]) -> AmbientGaloisField:
        key = tuple(polys)
        with self._lock:
            if key not in self._ambients:
                self._ambients[key] = self.fields.ambient(polys)
            return self._ambients[key]

    def full_ring(self, polys: Sequence[str]) -> CoordinateRing:
        return build_coordinate_ring(GaloisSubextension.full(self.ambient(polys)))

    def _normal_of_order(self, ambient: AmbientGaloisField, order: int) -> Subgroup:
        return next(h for h in normal_subgroups(ambient) if h.order == order)

    # ------------------------------------------------------------------ algebra

    def check_resultant(self) -> Dict[str, Any]:
        value = resultant(_poly("x^2 - 2"), _poly("x^2 - 3"))
        return {"ok": value == 1, "resultant": str(value)}

    def check_rational_factorization(self) -> Dict[str, Any]:
        factors = sorted(sorted(f.coeffs) for f, _ in factor_over_q(_poly("x^4 - 1")))
        expected = sorted(sorted(_poly(t).coeffs) for t in ("x - 1", "x + 1", "x^2 + 1"))
        irreducible = len(factor_over_q(_poly("x^4 + 1"))) == 1
        return {"ok": factors == expected and irreducible, "factors": len(factors), "x4_plus_1_irreducible": irreducible}

    def check_number_field_factorization(self) -> Dict[str, Any]:
        field = NumberField(_poly("x^2 - 2"))
        factors = factor_over_nf(field.polynomial_over(_poly("x^4 + 1")), field)
        degrees = sorted(f.degree for f, _ in factors)
        return {"ok": degrees == [2, 2], "degrees": degrees}

    def check_norm(self) -> Dict[str, Any]:
        field = NumberField(_poly("x^2 - 2"))
        f = Polynomial((-field.generator, field.one))
        value = norm(f, field)
        return {"ok": value == _poly("x^2 - 2"), "norm": [str(c) for c in value.coeffs]}

    def check_squarefree_decomposition(self) -> Dict[str, Any]:
        f = _poly("(x - 1)^2*(x + 1)")
        parts = sorted((g.degree, m) for g, m in f.squarefree_decomposition())
        return {"ok": parts == [(1, 1), (1, 2)], "parts": [list(p) for p in parts]}

    def check_divmod_identity(self) -> Dict[str, Any]:
        failures = 0
        for f, g in random_pairs(DIVMOD_SEED, DIVMOD_TRIALS):
            q, r = f.divmod(g)
            if q * g + r != f or r.degree >= g.degree:
                failures += 1
        return {"ok": failures == 0, "trials": DIVMOD_TRIALS, "failures": failures}

    def check_resultant_symmetry(self) -> Dict[str, Any]:
        failures = 0
        for f, g in random_pairs(DIVMOD_SEED + 1, DIVMOD_TRIALS):
            sign = -1 if (f.degree * g.degree) % 2 else 1
            if resultant(f, g) != sign * resultant(g, f):
                failures += 1
        return {"ok": failures == 0, "trials": DIVMOD_TRIALS, "failures": failures}

    # ------------------------------------------------------------------ galois

    def check_splitting_degrees(self) -> Dict[str, Any]:
        degrees = {
            "sqrt2": self.ambient(SQRT2).degree,
            "cube_root2": self.ambient(CUBE_ROOT2).degree,
            "compositum": self.ambient(COMPOSITUM).degree,
            "cyclic_quartic": self.ambient(CYCLIC_QUARTIC).degree,
        }
        ok = degrees == {"sqrt2": 2, "cube_root2": 6, "compositum": 12, "cyclic_quartic": 4}
        return {"ok": ok, "degrees": degrees}

    def check_group_axioms(self) -> Dict[str, Any]:
        results = {}
        for polys in SUITE_AMBIENTS:
            amb = self.ambient(polys)
            results[" ".join(polys)] = (
                amb.verify_group()
                and amb.verify_automorphisms()
                and (amb.degree > FACTOR_CHECK_DEGREE or amb.verify_automorphisms_by_factoring())
                and amb.verify_roots()
            )
        return {"ok": all(results.values()), "fields": results}

    def check_class_sizes(self) -> Dict[str, Any]:
        sizes = sorted(len(c) for c in conjugacy_classes(self.ambient(CUBE_ROOT2)))
        return {"ok": sizes == [1, 2, 3], "sizes": sizes}

    def check_projection_kernel(self) -> Dict[str, Any]:
        amap = ambient_map(self.ambient(CUBE_ROOT2), self.ambient(COMPOSITUM))
        kernel = len(amap.kernel())
        return {"ok": kernel == 2, "kernel_order": kernel}

    def check_fixed_fields(self) -> Dict[str, Any]:
        amb = self.ambient(CUBE_ROOT2)
        degrees = sorted(fixed_field(h).degree for h in all_subgroups(amb))
        return {"ok": degrees == [1, 2, 3, 3, 3, 6], "degrees": degrees}

    def check_galois_correspondence(self) -> Dict[str, Any]:
        outcome = {}
        for polys in SUITE_AMBIENTS:
            amb = self.ambient(polys)
            subgroups = all_subgroups(amb)
            bases = [(h, fixed_field(h)) for h in subgroups]
            held = all(b.stabilizer() == h and b.degree == amb.order // h.order for h, b in bases)
            outcome[" ".join(polys)] = {"subgroups": len(subgroups), "held": held}
        return {"ok": all(v["held"] for v in outcome.values()), "fields": outcome}

    def check_orbit_degree(self) -> Dict[str, Any]:
        outcome = {}
        for polys in SUITE_AMBIENTS + (REDUCIBLE,):
            amb = self.ambient(polys)
            for k, f in enumerate(amb.polys):
                orbits = sorted(len(o) for o in amb.root_orbits(k))
                degrees = sorted(g.degree for g, _ in factor_over_q(f))
                transitive = len(orbits) == 1
                outcome[f"{' '.join(polys)}: {format_polynomial(f)}"] = {
                    "orbits": orbits,
                    "held": orbits == degrees and transitive == (len(degrees) == 1),
                }
        return {"ok": all(v["held"] for v in outcome.values()), "polys": outcome}

    def check_extend_functoriality(self) -> Dict[str, Any]:
        base = self.ambient(("x^2 + 3",))
        middle, inner = extend_ambient(base, _poly("x^3 - 2"), self.fields.settings.max_degree)
        top, outer = extend_ambient(middle, _poly("x^2 - 2"), self.fields.settings.max_degree)
        composite = outer.compose(inner)
        functorial = composite.projection == outer.composite_projection(inner)
        # Gal(base) is abelian, so every embedding of base induces the same projection
        direct = composite.projection == ambient_map(base, top).projection
        kernel = len(composite.kernel())
        split, same = extend_ambient(middle, _poly("x^2 - 1"), self.fields.settings.max_degree)
        trivial = split is middle and same.is_identity()
        degrees = [base.degree, middle.degree, top.degree]
        ok = functorial and direct and trivial and degrees == [2, 6, 12] and kernel == top.order // base.order
        return {"ok": ok, "degrees": degrees, "kernel_order": kernel, "direct": direct, "already_split_identity": trivial}

    def check_degree_cap(self) -> Dict[str, Any]:
        # x^n - 2, one case per stage that enforces the cap
        reached = {}
        for n, cap in ((3, 4), (5, 4), (3000, 48)):
            try:
                splitting_field([Polynomial.rational([-2] + [0] * (n - 1) + [1])], max_degree=cap)
                reached[n] = None
            except DegreeCapExceeded as e:
                reached[n] = e.details["reached"]
        return {"ok": reached == {3: 6, 5: 5, 3000: 3000}, "reached": {str(n): r for n, r in reached.items()}}

    # ------------------------------------------------------------------ groupscheme

    def check_ring_dimensions(self) -> Dict[str, Any]:
        n6 = self.ambient(CUBE_ROOT2)
        a3 = self._normal_of_order(n6, 3)
        rings = {
            "sqrt2/Q": self.full_ring(SQRT2),
            "N6/Q": self.full_ring(CUBE_ROOT2),
            "N6/quadratic": build_coordinate_ring(GaloisSubextension(Subgroup.trivial(n6), a3)),
            "N12/Q": self.full_ring(COMPOSITUM),
        }
        dims = {k: r.dim for k, r in rings.items()}
        equivariant = {k: r.equivariance_check() for k, r in rings.items()}
        ok = dims == {"sqrt2/Q": 2, "N6/Q": 6, "N6/quadratic": 3, "N12/Q": 12} and all(equivariant.values())
        return {"ok": ok, "dims": dims, "equivariant": equivariant}

    def check_hopf_axioms(self) -> Dict[str, Any]:
        axioms = self.full_ring(CUBE_ROOT2).hopf_axioms()
        return {"ok": all(axioms.values()), **axioms}

    def check_point_group(self) -> Dict[str, Any]:
        ring = self.full_ring(CUBE_ROOT2)
        result = point_group_check(ring)
        ext = ring.extension
        diagram = all(
            conjugation_diagram_check(ring, phi, s) for phi in range(ext.degree) for s in range(ext.degree)
        )
        return {"ok": all(result.values()) and diagram, "diagram": diagram, **result}

    def check_base_points(self) -> Dict[str, Any]:
        counts = {
            "S3": len(base_points(self.full_ring(CUBE_ROOT2))),
            "C2": len(base_points(self.full_ring(SQRT2))),
        }
        return {"ok": counts == {"S3": 1, "C2": 2}, "counts": counts}

    def check_etale_structure(self) -> Dict[str, Any]:
        degrees = sorted(self.full_ring(CUBE_ROOT2).etale_factor_degrees())
        sizes = sorted(len(c) for c in conjugacy_classes(self.ambient(CUBE_ROOT2)))
        return {"ok": degrees == sizes, "degrees": degrees}

    def check_abelian_collapse(self) -> Dict[str, Any]:
        ok = self.full_ring(SQRT2).abelian_collapse_check() and self.full_ring(CYCLIC_QUARTIC).abelian_collapse_check()
        return {"ok": ok}

    def check_self_embeddings(self) -> Dict[str, Any]:
        ring = self.full_ring(CUBE_ROOT2)
        amb = ring.ambient
        phis = embeddings(ring.extension, amb)
        eye = [[amb.field.one if i == j else amb.field.zero for j in range(ring.dim)] for i in range(ring.dim)]
        identity = all(restriction(phi, ring, ring).matrix == eye for phi in phis)
        return {"ok": len(phis) == 6 and identity, "embeddings": len(phis), "identity": identity}

    def check_embedding_independence(self) -> Dict[str, Any]:
        small = self.full_ring(CUBE_ROOT2)
        large = self.full_ring(COMPOSITUM)
        amap = ambient_map(small.ambient, large.ambient)
        outcome = embedding_independence(small, large, amap)
        checks = outcome["map"].checks()
        ok = outcome["embeddings"] == 6 and outcome["identical"] and all(checks.values())
        return {"ok": ok, "embeddings": outcome["embeddings"], "identical": outcome["identical"], **checks}

    def check_tower(self) -> Dict[str, Any]:
        polys = [_poly(t) for t in COMPOSITUM]
        tower = truncated_absolute_group(polys, ambient=self.ambient(COMPOSITUM))
        checks = tower.checks()
        return {"ok": all(checks.values()) and tower.degrees == [1, 2, 6, 12], "degrees": tower.degrees, **checks}

    # ------------------------------------------------------------------ frobenius

    def check_dedekind(self) -> Dict[str, Any]:
        amb = self.ambient(CUBE_ROOT2)
        f = _poly("x^3 - 2")
        types = {}
        ok = True
        for p in FROBENIUS_PRIMES:
            _, sigma = frobenius_element(amb, p)
            cycle = amb.cycle_type(sigma, 0)
            types[str(p)] = cycle
            ok = ok and dedekind_check(amb, p) and cycle == splitting_type(amb, f, p)
            if p in EXPECTED_CYCLE_TYPES:
                ok = ok and cycle == EXPECTED_CYCLE_TYPES[p]
        return {"ok": ok, "cycle_types": types}

    def check_certificates(self) -> Dict[str, Any]:
        ring = self.full_ring(CUBE_ROOT2)
        outcome = {}
        for p in FROBENIUS_PRIMES:
            certs = algebraic_frobenius(ring, p).certificates
            choice = factor_choice_independence(ring, p)
            outcome[str(p)] = all(certs.values()) and choice["conjugate"] and choice["transport"]
        return {"ok": all(outcome.values()), "primes": outcome}

    def check_quadratic_frobenius(self) -> Dict[str, Any]:
        n6 = self.ambient(CUBE_ROOT2)
        ext = GaloisSubextension(self._normal_of_order(n6, 3), Subgroup.whole(n6))
        ring = build_coordinate_ring(ext)
        at7 = algebraic_frobenius(ring, 7).sigma_bar
        at5 = algebraic_frobenius(ring, 5).sigma_bar
        return {"ok": at7 == ext.identity and at5 != ext.identity, "at_5": at5, "at_7": at7}

    def check_restriction_compatibility(self) -> Dict[str, Any]:
        n6 = self.ambient(CUBE_ROOT2)
        small = build_coordinate_ring(GaloisSubextension(self._normal_of_order(n6, 3), Subgroup.whole(n6)))
        large = self.full_ring(CUBE_ROOT2)
        outcome = {str(p): frobenius_compatible_with_restriction(small, large, p) for p in FROBENIUS_PRIMES}
        return {"ok": all(outcome.values()), "primes": outcome}

    def check_bad_primes(self) -> Dict[str, Any]:
        amb = self.ambient(CUBE_ROOT2)
        rejected = []
        for p in (2, 3):
            try:
                frobenius_element(amb, p)
            except RamifiedOrBadPrime:
                rejected.append(p)
        try:
            frobenius_element(amb, 6)
            not_prime = False
        except ValueError:
            not_prime = True
        return {"ok": rejected == [2, 3] and not_prime, "rejected": rejected, "not_prime_rejected": not_prime}

    def check_infinite_place(self) -> Dict[str, Any]:
        identity = {}
        for polys in (SQRT2, CYCLIC_QUARTIC):
            ring = self.full_ring(polys)
            identity[" ".join(polys)] = frobenius_at_infinity(ring).images == tuple(ring.counit)
        try:
            frobenius_at_infinity(self.full_ring(CUBE_ROOT2))
            ramified = False
        except RamifiedInfinitePlace:
            ramified = True
        return {"ok": all(identity.values()) and ramified, "identity": identity, "cube_root_ramified": ramified}

    def check_chebotarev(self) -> Dict[str, Any]:
        sweep = sweep_range(self.ambient(CUBE_ROOT2), *CHEBOTAREV_RANGE)
        return {"ok": not sweep["warnings"], **sweep}

    # ------------------------------------------------------------------ motives

    def suite_motives(self) -> Dict[str, Motive]:
        amb = self.ambient(CUBE_ROOT2)
        regular = regular_motive(amb)
        irreducible = next(m for m, _ in irreducible_constituents(regular) if m.dim == 2)
        return {
            "unit": unit_motive(amb),
            "permutation": motive_of(EtaleScheme.from_polynomial(amb, _poly("x^3 - 2"))),
            "regular": regular,
            "irreducible": irreducible,
        }

    def check_de_rham_dimensions(self) -> Dict[str, Any]:
        dims = {name: (v.dim, de_rham(v).dim) for name, v in self.suite_motives().items()}
        expected = {"unit": 1, "permutation": 3, "regular": 6, "irreducible": 2}
        ok = all(dims[k][0] == dims[k][1] == expected[k] for k in expected)
        return {"ok": ok, "dims": {k: v[1] for k, v in dims.items()}}

    def check_comodules(self) -> Dict[str, Any]:
        outcome = {name: all(de_rham(v).comodule_checks().values()) for name, v in self.suite_motives().items()}
        return {"ok": all(outcome.values()), "motives": outcome}

    def check_gamma_comparison(self) -> Dict[str, Any]:
        scheme = EtaleScheme.from_polynomial(self.ambient(CUBE_ROOT2), _poly("x^3 - 2"))
        result = gamma_comparison(scheme)
        return {**result, "ok": result["ok"]}

    def check_hom_dimensions(self) -> Dict[str, Any]:
        motives = self.suite_motives()
        realizations = {name: de_rham(v) for name, v in motives.items()}
        table = {}
        ok = True
        for a, v in motives.items():
            for b, w in motives.items():
                etale = len(hom_motives(v, w))
                dr = len(comodule_homs(realizations[a], realizations[b]))
                table[f"{a}->{b}"] = etale
                ok = ok and etale == dr
        ok = ok and table["permutation->unit"] == 1
        return {"ok": ok, "dims": table}

    def check_sections(self) -> Dict[str, Any]:
        amb = self.ambient(CUBE_ROOT2)
        scheme = EtaleScheme.from_polynomial(amb, _poly("x^3 - 2"))
        v = motive_of(scheme)
        counts = {}
        ok = True
        for h in all_subgroups(amb):
            dim = len(sections(v, h))
            counts[",".join(map(str, h.members))] = dim
            ok = ok and dim == orbit_count(scheme, h)
        own = scheme.stabilizer(scheme.base_points[0])
        ok = ok and len(sections(v, own)) == 2
        sheaf = all(
            sheaf_axiom_check(v, inner, outer)
            for outer in all_subgroups(amb)
            for inner in all_subgroups(amb)
            if inner.is_normal_in(outer)
        )
        return {"ok": ok and sheaf, "sections": counts, "sheaf_axiom": sheaf}

    def check_tensor_structure(self) -> Dict[str, Any]:
        amb = self.ambient(CUBE_ROOT2)
        scheme = EtaleScheme.from_polynomial(amb, _poly("x^3 - 2"))
        motives = self.suite_motives()
        products = product_check(scheme, scheme)
        compat = {
            "permutation": tensor_compatibility(motives["permutation"], motives["permutation"])["ok"],
            "irreducible": tensor_compatibility(motives["irreducible"], motives["irreducible"])["ok"],
        }
        return {"ok": products and all(compat.values()), "product": products, "tensor": compat}

    def check_decomposition(self) -> Dict[str, Any]:
        constituents = irreducible_constituents(self.suite_motives()["regular"])
        parts = [(m.dim, mult) for m, mult in constituents]
        # S3 has only absolutely irreducible rational representations
        ends = [hom_dimension(m, m) for m, _ in constituents]
        finite = all(finite_type_level(v)[1] for v in self.suite_motives().values())
        ok = sorted(parts) == [(1, 1), (1, 1), (2, 2)] and ends == [1, 1, 1] and finite
        return {"ok": ok, "constituents": [list(p) for p in parts], "end_dims": ends}

    # ------------------------------------------------------------------ cli

    def check_cli(self) -> Dict[str, Any]:
        from typer.testing import CliRunner

        from ..cli.main import app

        runner = CliRunner()
        split = runner.invoke(app, ["split", "--poly", "x^2-2"])
        again = runner.invoke(app, ["split", "--poly", "x^2-2"])
        bad = runner.invoke(app, ["frobenius", "--poly", "x^3-2", "-p", "6"])
        parse = runner.invoke(app, ["split", "--poly", "x^2 + y"])
        ramified = runner.invoke(app, ["frobenius", "--poly", "x^3-2", "-p", "3"])
        codes = {
            "split": split.exit_code,
            "not_prime": bad.exit_code,
            "parse_error": parse.exit_code,
            "ramified": ramified.exit_code,
        }
        deterministic = _strip_timing(split.stdout) == _strip_timing(again.stdout)
        ok = codes == {"split": 0, "not_prime": 2, "parse_error": 2, "ramified": 1} and deterministic
        return {"ok": ok, "exit_codes": codes, "deterministic": deterministic}

    # ------------------------------------------------------------------ driver

    def checks(self) -> List[Check]:
        table = [
            ("algebra", "resultant", self.check_resultant),
            ("algebra", "rational_factorization", self.check_rational_factorization),
            ("algebra", "number_field_factorization", self.check_number_field_factorization),
            ("algebra", "norm", self.check_norm),
            ("algebra", "squarefree_decomposition", self.check_squarefree_decomposition),
            ("algebra", "divmod_identity", self.check_divmod_identity),
            ("algebra", "resultant_symmetry", self.check_resultant_symmetry),
            ("galois", "splitting_degrees", self.check_splitting_degrees),
            ("galois", "group_axioms", self.check_group_axioms),
            ("galois", "class_sizes", self.check_class_sizes),
            ("galois", "projection_kernel", self.check_projection_kernel),
            ("galois", "fixed_fields", self.check_fixed_fields),
            ("galois", "galois_correspondence", self.check_galois_correspondence),
            ("galois", "orbit_degree", self.check_orbit_degree),
            ("galois", "extend_functoriality", self.check_extend_functoriality),
            ("galois", "degree_cap", self.check_degree_cap),
            ("groupscheme", "ring_dimensions", self.check_ring_dimensions),
            ("groupscheme", "hopf_axioms", self.check_hopf_axioms),
            ("groupscheme", "point_group", self.check_point_group),
            ("groupscheme", "base_points", self.check_base_points),
            ("groupscheme", "etale_structure", self.check_etale_structure),
            ("groupscheme", "abelian_collapse", self.check_abelian_collapse),
            ("groupscheme", "self_embeddings", self.check_self_embeddings),
            ("groupscheme", "embedding_independence", self.check_embedding_independence),
            ("groupscheme", "tower", self.check_tower),
            ("frobenius", "dedekind", self.check_dedekind),
            ("frobenius", "certificates", self.check_certificates),
            ("frobenius", "quadratic_subfield", self.check_quadratic_frobenius),
            ("frobenius", "restriction_compatibility", self.check_restriction_compatibility),
            ("frobenius", "bad_primes", self.check_bad_primes),
            ("frobenius", "infinite_place", self.check_infinite_place),
            ("motives", "de_rham_dimensions", self.check_de_rham_dimensions),
            ("motives", "comodules", self.check_comodules),
            ("motives", "gamma_comparison", self.check_gamma_comparison),
            ("motives", "hom_dimensions", self.check_hom_dimensions),
            ("motives", "sections", self.check_sections),
            ("motives", "tensor_structure", self.check_tensor_structure),
            ("motives", "decomposition", self.check_decomposition),
            ("cli", "exit_codes", self.check_cli),
        ]
        out = [Check(suite, name, fn) for suite, name, fn in table]
        out.append(Check("frobenius", "chebotarev", self.check_chebotarev, blocking=False))
        return out

    def _run_one(self, check: Check):
        job_id = self.job_manager.create_job(check.suite, check.name, check.blocking)
        self.job_manager.update_job(job_id, status=JobStatus.RUNNING, start_time=datetime.now())
        try:
            details = check.fn()
        except GaloisError as e:
            logger.error(f"Check {job_id} raised {type(e).__name__}: {e.message}")
            self.job_manager.update_job(
                job_id, status=JobStatus.FAILED, end_time=datetime.now(), errors=[f"{e.code}: {e.message}"]
            )
            return
        except Exception as e:
            logger.exception(f"Check {job_id} crashed")
            self.job_manager.update_job(
                job_id, status=JobStatus.FAILED, end_time=datetime.now(), errors=[f"{type(e).__name__}: {e}"]
            )
            return
        ok = bool(details.pop("ok", False))
        errors = [] if ok else ["check did not hold"]
        if not ok:
            level = logging.ERROR if check.blocking else logging.WARNING
            logger.log(level, f"Check {job_id} did not hold")
        self.job_manager.update_job(
            job_id, status=JobStatus.COMPLETED, end_time=datetime.now(), details=details, errors=errors
        )

    def run(self, suite: str = "all", workers: int = 1) -> Dict[str, Any]:
        if suite != "all" and suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; expected one of all, {', '.join(SUITES)}")
        selected = [c for c in self.checks() if suite == "all" or c.suite == suite]
        logger.info(f"Running {len(selected)} checks (suite {suite})")
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                list(pool.map(self._run_one, selected))
        else:
            for check in selected:
                self._run_one(check)
        jobs = self.job_manager.list_jobs()
        failed = [j.job_id for j in self.job_manager.failed_blocking()]
        return {
            "suite": suite,
            "passed": not failed,
            "total": len(jobs),
            "failed": failed,
            "warnings": [j.job_id for j in self.job_manager.warnings()],
            "jobs": [j.to_json() for j in jobs],
        }


def _strip_timing(text: str) -> str:
    try:
        data = json.loads(text)
    except ValueError:
        return text
    data.pop("timing", None)
    data.get("results", {}).pop("cache_hit", None)
    return json.dumps(data, sort_keys=True)
