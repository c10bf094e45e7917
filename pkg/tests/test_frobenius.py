from fractions import Fraction

import pytest

from algebraicgalois.core.errors import RamifiedInfinitePlace, RamifiedOrBadPrime
from algebraicgalois.frobenius.algebraic import (
    algebraic_frobenius,
    chebotarev_sweep,
    factor_choice_independence,
    frobenius_compatible_with_restriction,
    frobenius_point,
)
from algebraicgalois.frobenius.infinite import count_real_roots, frobenius_at_infinity, is_totally_real
from algebraicgalois.frobenius.primes import (
    choose_reduction_basis,
    dedekind_check,
    frobenius_element,
    ramified_primes,
    splitting_type,
    unramified_primes,
)
from algebraicgalois.galois.embeddings import GaloisSubextension
from algebraicgalois.galois.subgroups import Subgroup, normal_subgroups
from algebraicgalois.groupscheme.coordinate_ring import build_coordinate_ring

from .conftest import full_ring, poly, split


@pytest.fixture(scope="module")
def quadratic_ring(n6):
    """A(Q(sqrt -3)/Q) inside the splitting field of x^3 - 2."""
    a3 = next(h for h in normal_subgroups(n6) if h.order == 3)
    return build_coordinate_ring(GaloisSubextension(a3, Subgroup.whole(n6)))


@pytest.mark.parametrize("p, cycle", [(5, [1, 2]), (7, [3]), (11, [1, 2]), (13, [3]), (31, [1, 1, 1])])
def test_frobenius_cycle_types(n6, p, cycle):
    _, sigma = frobenius_element(n6, p)
    assert n6.cycle_type(sigma, 0) == cycle
    assert splitting_type(n6, poly("x^3 - 2"), p) == cycle
    assert dedekind_check(n6, p)


def test_ramified_primes(n6, sqrt2):
    assert ramified_primes(n6) == [2, 3]
    assert ramified_primes(sqrt2) == [2]
    assert unramified_primes(n6, 2, 20) == [5, 7, 11, 13, 17, 19]


def test_ramified_primes_come_from_defining_polynomials(n6):
    # discriminant 4/3 and a denominator of 3
    assert ramified_primes(split("x^2 - 1/3")) == [2, 3]
    for p in unramified_primes(n6, 5, 200):
        basis = choose_reduction_basis(n6, p)
        assert basis.usable_at(p)
        assert Fraction(basis.discriminant).numerator % p != 0


@pytest.mark.parametrize("p", [2, 3])
def test_ramified_primes_are_rejected(n6, p):
    with pytest.raises(RamifiedOrBadPrime):
        frobenius_element(n6, p)


def test_non_prime_is_rejected(n6):
    with pytest.raises(ValueError):
        frobenius_element(n6, 6)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 31])
def test_certificates(ring6, p):
    data = algebraic_frobenius(ring6, p)
    assert all(data.certificates.values()), data.certificates
    choice = factor_choice_independence(ring6, p)
    assert choice["conjugate"] and choice["transport"]
    assert frobenius_point(ring6, p).is_homomorphism()


def test_frobenius_record_json(ring6):
    record = algebraic_frobenius(ring6, 7).to_json()
    assert record["p"] == 7
    assert record["order"] == 3
    assert record["residue_degrees"] == [3, 3]


def test_quadratic_subfield(quadratic_ring):
    ext = quadratic_ring.extension
    assert algebraic_frobenius(quadratic_ring, 7).sigma_bar == ext.identity
    assert algebraic_frobenius(quadratic_ring, 5).sigma_bar != ext.identity


@pytest.mark.parametrize("p", [5, 7, 11, 13, 31])
def test_restriction_compatibility(quadratic_ring, ring6, p):
    assert frobenius_compatible_with_restriction(quadratic_ring, ring6, p)


def test_real_roots():
    assert count_real_roots(poly("x^3 - 2")) == 1
    assert is_totally_real(poly("x^4 - 5*x^2 + 5"))
    assert not is_totally_real(poly("x^2 + 1"))


def test_infinite_place(sqrt2, cyclic_quartic, ring6):
    for ambient in (sqrt2, cyclic_quartic):
        ring = full_ring(ambient)
        assert frobenius_at_infinity(ring).images == tuple(ring.counit)
    with pytest.raises(RamifiedInfinitePlace):
        frobenius_at_infinity(ring6)


def test_chebotarev_counts(n6):
    primes = unramified_primes(n6, 2, 200)
    sweep = chebotarev_sweep(n6, primes)
    assert sweep["primes"] == len(primes)
    assert sum(row["count"] for row in sweep["classes"]) == len(primes)
    assert sorted(row["size"] for row in sweep["classes"]) == [1, 2, 3]
