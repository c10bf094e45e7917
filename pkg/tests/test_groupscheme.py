import pytest

from algebraicgalois.algebra.linalg import field_rref
from algebraicgalois.core.errors import AmbientMismatch
from algebraicgalois.galois.ambient import ambient_map
from algebraicgalois.galois.embeddings import GaloisSubextension, embeddings, subfield_subgroup
from algebraicgalois.galois.fixed_fields import fixed_field
from algebraicgalois.galois.subgroups import Subgroup, conjugacy_classes, normal_subgroups
from algebraicgalois.groupscheme.coordinate_ring import build_coordinate_ring
from algebraicgalois.groupscheme.points import (
    base_points,
    conjugation_diagram_check,
    counit_point,
    galois_to_point,
    point_group_check,
    point_inv,
    point_mul,
    points,
)
from algebraicgalois.groupscheme.restriction import embedding_independence, restriction
from algebraicgalois.groupscheme.tower import truncated_absolute_group

from .conftest import full_ring, poly


def _basis_vector(ring, j):
    field = ring.ambient.field
    return [field.one if i == j else field.zero for i in range(ring.dim)]


def test_ring_dimensions(sqrt2, n6, n12, ring6):
    a3 = next(h for h in normal_subgroups(n6) if h.order == 3)
    relative = build_coordinate_ring(GaloisSubextension(Subgroup.trivial(n6), a3))
    assert full_ring(sqrt2).dim == 2
    assert ring6.dim == 6
    assert relative.dim == 3
    assert full_ring(n12).dim == 12
    for ring in (ring6, relative):
        assert ring.equivariance_check()
        assert ring.base_change_check()


def test_hopf_axioms(ring6):
    assert ring6.hopf_axioms() == {"coassociativity": True, "counit": True, "antipode": True, "evaluation": True}


def test_relative_ring_hopf_axioms(n6):
    a3 = next(h for h in normal_subgroups(n6) if h.order == 3)
    relative = build_coordinate_ring(GaloisSubextension(Subgroup.trivial(n6), a3))
    assert all(relative.hopf_axioms().values())
    assert relative.abelian_collapse_check()


def test_unit_is_multiplicative_identity(ring6):
    for j in range(ring6.dim):
        e_j = _basis_vector(ring6, j)
        assert ring6.multiply(ring6.unit, e_j) == e_j


def test_evaluation_points_form_the_group(ring6):
    assert all(point_group_check(ring6).values())
    ext = ring6.extension
    for s in range(ext.degree):
        x = galois_to_point(ring6, s)
        assert x.is_homomorphism()
        assert point_mul(x, point_inv(x)) == counit_point(ring6)
        for phi in range(ext.degree):
            assert conjugation_diagram_check(ring6, phi, s)


def test_points_over_the_top_field(ring6):
    assert len(points(ring6)) == ring6.dim


def test_points_in_a_subfield(ring6):
    m = fixed_field(subfield_subgroup(ring6.ambient, poly("x^2 + 3")))
    found = points(ring6, m)
    assert all(x.lies_in_target() and x.is_homomorphism() for x in found)
    assert set(base_points(ring6)) <= set(found)


def test_points_reject_small_target(n6):
    a3 = next(h for h in normal_subgroups(n6) if h.order == 3)
    ring = build_coordinate_ring(GaloisSubextension(Subgroup.trivial(n6), a3))
    with pytest.raises(AmbientMismatch):
        points(ring, fixed_field(Subgroup.whole(n6)))


def test_base_points(sqrt2, ring6):
    assert len(base_points(ring6)) == 1
    assert len(base_points(full_ring(sqrt2))) == 2


def test_etale_structure_matches_classes(n6, ring6):
    assert ring6.etale_factor_degrees() == sorted(len(c) for c in conjugacy_classes(n6))


def test_abelian_collapse(sqrt2, cyclic_quartic):
    assert full_ring(sqrt2).abelian_collapse_check()
    assert full_ring(cyclic_quartic).abelian_collapse_check()


def test_self_embeddings_restrict_to_identity(ring6):
    phis = embeddings(ring6.extension, ring6.ambient)
    assert len(phis) == 6
    eye = [_basis_vector(ring6, i) for i in range(ring6.dim)]
    for phi in phis:
        assert restriction(phi, ring6, ring6).matrix == eye


def test_embedding_independence(n6, n12, ring6):
    large = full_ring(n12)
    outcome = embedding_independence(ring6, large, ambient_map(n6, n12))
    assert outcome["embeddings"] == 6
    assert outcome["identical"]
    checks = outcome["map"].checks()
    assert all(checks.values()), checks


def test_tower(n12):
    tower = truncated_absolute_group([poly("x^3 - 2"), poly("x^2 - 2")], ambient=n12)
    assert tower.degrees == [1, 2, 6, 12]
    assert tower.checks() == {"functorial": True, "injective": True, "embedding_independent": True}
    assert [level["degree"] for level in tower.to_json()["levels"]] == [1, 2, 6, 12]


def test_ring_json_has_hopf_structure(ring6):
    data = ring6.to_json()
    plain = ring6.to_json(include_hopf=False)
    assert len(data) > len(plain)


def test_relative_basis_is_in_reduced_echelon_form_over_k(n6):
    a3 = next(h for h in normal_subgroups(n6) if h.order == 3)
    ring = build_coordinate_ring(GaloisSubextension(Subgroup.trivial(n6), a3))
    rows = ring.k_coordinate_rows(ring.basis)
    assert len(rows) == ring.dim == 3
    assert field_rref(rows) == rows
    base = ring.extension.base
    for row in rows:
        assert all(base.contains(c) for c in row)
        pivot = next(c for c in row if c)
        assert pivot == n6.field.one
