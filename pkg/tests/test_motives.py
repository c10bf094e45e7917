import pytest

from algebraicgalois.core.errors import AmbientMismatch
from algebraicgalois.galois.subgroups import Subgroup, all_subgroups, normal_subgroups
from algebraicgalois.motives.motive import (
    EtaleScheme,
    direct_sum,
    endomorphism_check,
    finite_type_level,
    hom_dimension,
    hom_motives,
    irreducible_constituents,
    kernel,
    motive_of,
    orbit_count,
    product_check,
    regular_motive,
    sections,
    sections_by_subgroup,
    sheaf_axiom_check,
    tensor,
    unit_motive,
)
from algebraicgalois.motives.realizations import comodule_homs, de_rham, gamma_comparison, tensor_compatibility

from .conftest import poly


@pytest.fixture(scope="module")
def scheme(n6):
    """Spec Q[x]/(x^3 - 2): three points permuted by S3."""
    return EtaleScheme.from_polynomial(n6, poly("x^3 - 2"))


@pytest.fixture(scope="module")
def motives(n6, scheme):
    print("\n--- Building the S3 test motives ---")
    regular = regular_motive(n6)
    irreducible = next(m for m, _ in irreducible_constituents(regular) if m.dim == 2)
    return {
        "unit": unit_motive(n6),
        "permutation": motive_of(scheme),
        "regular": regular,
        "irreducible": irreducible,
    }


def test_scheme_from_polynomial(scheme):
    assert scheme.size == 3
    assert len(scheme.orbits()) == 1
    assert scheme.component_polynomials() == [poly("x^3 - 2")]
    assert scheme.stabilizer(scheme.base_points[0]).order == 2


def test_scheme_must_split(n6):
    with pytest.raises(AmbientMismatch):
        EtaleScheme.from_polynomial(n6, poly("x^2 - 5"))


def test_scheme_from_subgroups(n6):
    a3 = next(h for h in normal_subgroups(n6) if h.order == 3)
    disjoint = EtaleScheme.from_subgroups(n6, [a3, Subgroup.whole(n6)])
    assert disjoint.size == 3
    assert sorted(len(o) for o in disjoint.orbits()) == [1, 2]
    assert [h.order for h in disjoint.components] == [3, 6]


def test_actions_are_homomorphisms(motives):
    for v in motives.values():
        assert v.is_homomorphism()


def test_characters(motives):
    assert sorted(motives["unit"].character()) == [1, 1, 1]
    assert sorted(motives["permutation"].character()) == [0, 1, 3]
    assert sorted(motives["regular"].character()) == [0, 0, 6]
    assert sorted(motives["irreducible"].character()) == [-1, 0, 2]


def test_de_rham_dimensions(motives):
    expected = {"unit": 1, "permutation": 3, "regular": 6, "irreducible": 2}
    for name, v in motives.items():
        assert de_rham(v).dim == v.dim == expected[name]


def test_comodule_axioms(motives):
    for name, v in motives.items():
        checks = de_rham(v).comodule_checks()
        assert checks == {"coassociative": True, "counit": True, "evaluation": True}, name


def test_hom_dimensions_agree(motives):
    realizations = {name: de_rham(v) for name, v in motives.items()}
    for a, v in motives.items():
        for b, w in motives.items():
            assert len(hom_motives(v, w)) == len(comodule_homs(realizations[a], realizations[b])), f"{a}->{b}"
    assert hom_dimension(motives["permutation"], motives["unit"]) == 1
    assert hom_dimension(motives["permutation"], motives["permutation"]) == 2
    assert hom_dimension(motives["regular"], motives["regular"]) == 6
    assert hom_dimension(motives["irreducible"], motives["unit"]) == 0


def test_sections_count_orbits(n6, scheme, motives):
    v = motives["permutation"]
    for h in all_subgroups(n6):
        assert len(sections(v, h)) == orbit_count(scheme, h)
    assert len(sections(v, scheme.stabilizer(scheme.base_points[0]))) == 2
    assert len(sections(v, Subgroup.whole(n6))) == 1
    assert len(sections(v, Subgroup.trivial(n6))) == 3
    by_subgroup = sections_by_subgroup(v)
    assert len(by_subgroup) == len(all_subgroups(n6))


def test_sheaf_axiom(n6, motives):
    v = motives["permutation"]
    for outer in all_subgroups(n6):
        for inner in all_subgroups(n6):
            if inner.is_normal_in(outer):
                assert sheaf_axiom_check(v, inner, outer)


def test_sheaf_axiom_needs_normal_subgroup(n6, scheme, motives):
    own = scheme.stabilizer(scheme.base_points[0])
    with pytest.raises(ValueError):
        sheaf_axiom_check(motives["permutation"], own, Subgroup.whole(n6))


def test_tensor_and_sum(scheme, motives):
    assert product_check(scheme, scheme)
    square = tensor(motives["permutation"], motives["permutation"])
    assert square.dim == 9
    assert square.is_homomorphism()
    assert direct_sum(motives["unit"], motives["irreducible"]).dim == 3
    assert tensor_compatibility(motives["permutation"], motives["permutation"])["ok"]
    assert tensor_compatibility(motives["irreducible"], motives["irreducible"])["ok"]


def test_decomposition_of_regular_motive(motives):
    parts = sorted((m.dim, mult) for m, mult in irreducible_constituents(motives["regular"]))
    assert parts == [(1, 1), (1, 1), (2, 2)]


def test_kernels_and_finite_type(n6, motives):
    assert kernel(motives["unit"]) == Subgroup.whole(n6)
    assert kernel(motives["regular"]) == Subgroup.trivial(n6)
    for v in motives.values():
        assert finite_type_level(v)[1]


def test_gamma_comparison(scheme):
    result = gamma_comparison(scheme)
    assert result["ok"], result
    assert result["dim"] == 3
    assert result["component_degrees"] == [3]


def test_disjoint_union_keeps_repeated_components(n6, scheme):
    point = EtaleScheme.from_polynomial(n6, poly("x"))
    twice = point.disjoint_union(point)
    assert twice.size == 2
    assert len(twice.orbits()) == 2
    assert twice.polynomial is None
    assert motive_of(twice).dim == 2
    both = scheme.disjoint_union(point)
    assert both.size == 4
    assert sorted(len(o) for o in both.orbits()) == [1, 3]
    assert both.polynomial == poly("x^4 - 2*x")


def test_constituents_have_division_endomorphisms(n6, cyclic_quartic, motives):
    for m, _ in irreducible_constituents(motives["regular"]):
        assert hom_dimension(m, m) == 1
        assert endomorphism_check(m)
    # the 2-dimensional rational constituent of C4 has End = Q(i)
    quartic = {m.dim: hom_dimension(m, m) for m, _ in irreducible_constituents(regular_motive(cyclic_quartic))}
    assert quartic == {1: 1, 2: 2}


def test_endomorphism_check_rejects_a_sum_of_copies(motives):
    twice = direct_sum(motives["irreducible"], motives["irreducible"])
    assert hom_dimension(twice, twice) == 4
    assert not endomorphism_check(twice)
