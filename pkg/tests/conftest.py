import pytest

from algebraicgalois.algebra.parsing import parse_polynomial
from algebraicgalois.galois.ambient import splitting_field
from algebraicgalois.galois.embeddings import GaloisSubextension
from algebraicgalois.groupscheme.coordinate_ring import build_coordinate_ring


def poly(text):
    """Shorthand used across the test modules."""
    return parse_polynomial(text)


def split(*texts):
    return splitting_field([poly(t) for t in texts])


def full_ring(ambient):
    return build_coordinate_ring(GaloisSubextension.full(ambient))


@pytest.fixture(scope="module")
def sqrt2():
    """Q(sqrt 2), the smallest nontrivial Galois field."""
    print("\n--- Building splitting field of x^2 - 2 ---")
    return split("x^2 - 2")


@pytest.fixture(scope="module")
def n6():
    """Splitting field of x^3 - 2, degree 6 with group S3."""
    print("\n--- Building splitting field of x^3 - 2 ---")
    return split("x^3 - 2")


@pytest.fixture(scope="module")
def n12():
    """Compositum of the splitting fields of x^3 - 2 and x^2 - 2."""
    print("\n--- Building splitting field of x^3 - 2, x^2 - 2 ---")
    return split("x^3 - 2", "x^2 - 2")


@pytest.fixture(scope="module")
def cyclic_quartic():
    """Totally real cyclic quartic field."""
    print("\n--- Building splitting field of x^4 - 5x^2 + 5 ---")
    return split("x^4 - 5*x^2 + 5")


@pytest.fixture(scope="module")
def ring6(n6):
    return full_ring(n6)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    """An empty cache directory, with GALOIS_* variables cleared."""
    for name in ("GALOIS_CACHE", "GALOIS_MAX_DEGREE", "GALOIS_WORKERS", "GALOIS_DEBUG_LOG"):
        monkeypatch.delenv(name, raising=False)
    directory = tmp_path / "ambients"
    directory.mkdir()
    return directory
