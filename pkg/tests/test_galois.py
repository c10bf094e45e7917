import pytest

from algebraicgalois.core.errors import DegreeCapExceeded, NoEmbedding, VerificationFailed
from algebraicgalois.algebra.factorization import factor_over_q
from algebraicgalois.algebra.polynomial import Polynomial
from algebraicgalois.galois.ambient import AmbientGaloisField, ambient_map, extend_ambient, splitting_field
from algebraicgalois.galois.embeddings import GaloisSubextension, embeddings, subfield_subgroup
from algebraicgalois.galois.fixed_fields import fixed_field
from algebraicgalois.galois.subgroups import (
    Subgroup,
    all_subgroups,
    center,
    conjugacy_classes,
    is_abelian,
    normal_subgroups,
)

from .conftest import poly, split


def test_splitting_degrees(sqrt2, n6, n12, cyclic_quartic):
    assert sqrt2.degree == 2
    assert n6.degree == 6
    assert n12.degree == 12
    assert cyclic_quartic.degree == 4
    for ambient in (sqrt2, n6, n12, cyclic_quartic):
        assert ambient.order == ambient.degree
        assert ambient.verify_group()
        assert ambient.verify_automorphisms()
        assert ambient.verify_roots()


def test_identity_is_index_zero(n6):
    assert n6.autos[0] == n6.generator
    assert all(n6.compose(0, i) == i for i in range(n6.order))


def test_s3_structure(n6):
    assert sorted(len(c) for c in conjugacy_classes(n6)) == [1, 2, 3]
    assert center(n6).order == 1
    assert not is_abelian(n6)
    assert sorted(h.order for h in normal_subgroups(n6)) == [1, 3, 6]
    assert len(all_subgroups(n6)) == 6


def test_cyclic_quartic_is_abelian(cyclic_quartic):
    assert is_abelian(cyclic_quartic)
    assert sorted(len(c) for c in conjugacy_classes(cyclic_quartic)) == [1, 1, 1, 1]


def test_cycle_types_cover_s3(n6):
    types = sorted(n6.cycle_type(i, 0) for i in range(n6.order))
    assert types == [[1, 1, 1], [1, 2], [1, 2], [1, 2], [3], [3]]


def test_fixed_field_degrees(n6):
    degrees = sorted(fixed_field(h).degree for h in all_subgroups(n6))
    assert degrees == [1, 2, 3, 3, 3, 6]


def test_fixed_field_contains_its_elements(n6):
    h = subfield_subgroup(n6, poly("x^3 - 2"))
    basis = fixed_field(h)
    assert basis.degree == 3
    root = n6.roots[0][0]
    assert basis.contains(root)
    assert basis.stabilizer() == h


def test_quadratic_subfield_subgroup(n6):
    h = subfield_subgroup(n6, poly("x^2 + 3"))
    assert h.order == 3
    assert h.is_normal()


def test_subfield_without_root(n6):
    with pytest.raises(NoEmbedding):
        subfield_subgroup(n6, poly("x^2 - 5"))


def test_degree_cap():
    with pytest.raises(DegreeCapExceeded):
        splitting_field([poly("x^3 - 2")], max_degree=4)


def test_projection_kernel(n6, n12):
    amap = ambient_map(n6, n12)
    assert len(amap.kernel()) == 2
    assert amap(n6.generator) == amap.image


def test_extend_ambient(n6):
    extended, amap = extend_ambient(n6, poly("x^2 - 2"))
    assert extended.degree == 12
    assert len(amap.kernel()) == 2
    same, identity = extend_ambient(n6, poly("x^2 + 3"))
    assert same is n6
    assert identity.is_identity()


def test_relative_group(n6):
    a3 = next(h for h in normal_subgroups(n6) if h.order == 3)
    quadratic = GaloisSubextension(a3, Subgroup.whole(n6))
    assert quadratic.degree == 2
    assert quadratic.is_abelian()
    relative = GaloisSubextension(Subgroup.trivial(n6), a3)
    assert relative.degree == 3
    assert relative.is_abelian()
    full = GaloisSubextension.full(n6)
    assert full.degree == 6
    assert len(full.center) == 1


def test_self_embeddings(n6):
    assert len(embeddings(GaloisSubextension.full(n6), n6)) == 6


def test_ambient_json_roundtrip(n6):
    data = n6.to_json()
    rebuilt = AmbientGaloisField.from_json(data)
    assert rebuilt == n6
    assert rebuilt.table == n6.table


def test_ambient_json_rejects_tampered_table(n6):
    data = n6.to_json()
    data["table"] = [list(reversed(row)) for row in data["table"]]
    with pytest.raises(VerificationFailed):
        AmbientGaloisField.from_json(data)


def test_degree_cap_is_checked_before_number_field_work():
    huge = Polynomial.rational([-2] + [0] * 2999 + [1])
    with pytest.raises(DegreeCapExceeded) as err:
        splitting_field([huge], max_degree=48)
    assert err.value.details["reached"] == 3000
    with pytest.raises(DegreeCapExceeded) as err:
        splitting_field([poly("x^3 - 2"), poly("x^5 - 2")], max_degree=10)
    assert err.value.details["reached"] == 5
    assert err.value.details["cap"] == 10


def test_automorphisms_match_factoring_the_modulus(sqrt2, n6, cyclic_quartic):
    for ambient in (sqrt2, n6, cyclic_quartic):
        assert ambient.verify_automorphisms_by_factoring()


@pytest.mark.parametrize(
    "texts", [("x^3 - 2",), ("x^4 - 1",), ("x^4 - 5*x^2 + 5",), ("x^3 - 2*x^2 - x + 2", "x^2 + 1")]
)
def test_orbits_match_rational_factors(texts):
    ambient = split(*texts)
    for k, f in enumerate(ambient.polys):
        orbits = ambient.root_orbits(k)
        assert sorted(len(o) for o in orbits) == sorted(g.degree for g, _ in factor_over_q(f))
        assert (len(orbits) == 1) == (len(factor_over_q(f)) == 1)
        assert sorted(r for o in orbits for r in o) == list(range(f.degree))


def test_fixed_field_stabilizer_round_trip(sqrt2, n6, n12, cyclic_quartic):
    for ambient in (sqrt2, n6, n12, cyclic_quartic):
        for h in all_subgroups(ambient):
            basis = fixed_field(h)
            assert basis.stabilizer() == h
            assert basis.degree == ambient.order // h.order


def test_extend_ambient_composes():
    base = split("x^2 + 3")
    middle, inner = extend_ambient(base, poly("x^3 - 2"))
    top, outer = extend_ambient(middle, poly("x^2 - 2"))
    assert [base.degree, middle.degree, top.degree] == [2, 6, 12]
    composite = outer.compose(inner)
    assert composite.projection == outer.composite_projection(inner)
    assert len(composite.kernel()) == top.order // base.order
    direct = ambient_map(base, top)
    assert composite.projection == direct.projection


def test_extend_ambient_by_split_polynomial(n6):
    same, identity = extend_ambient(n6, poly("x^2 - 1"))
    assert same is n6
    assert identity.is_identity()
    assert identity.kernel() == [n6.identity_index]
