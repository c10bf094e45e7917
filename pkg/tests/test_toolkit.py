import pytest

from algebraicgalois.core.config import Settings
from algebraicgalois.toolkit import GaloisToolkit


@pytest.fixture(scope="module")
def toolkit():
    print("\n--- Setting up toolkit fixture ---")
    return GaloisToolkit(Settings())


def test_manifest_matches_handlers(toolkit):
    assert sorted(toolkit.tools) == [
        "check",
        "coordinate_ring",
        "dr",
        "frobenius",
        "frobenius_infinity",
        "frobenius_sweep",
        "group",
        "motive",
        "points",
        "restrict",
        "split",
    ]
    for name, tool in toolkit.tools.items():
        assert tool["name"] == name
        assert tool["description"]


def test_unknown_tool(toolkit):
    result = toolkit.handle_tool_call("nope", {})
    assert result["error"]["code"] == "unknown_tool"


def test_domain_errors_become_error_objects(toolkit):
    result = toolkit.handle_tool_call("frobenius", {"polys": ["x^3 - 2"], "prime": 2})
    assert result["error"]["code"] == "ramified_or_bad_prime"
    assert result["error"]["type"] == "RamifiedOrBadPrime"


def test_group_tool(toolkit):
    result = toolkit.handle_tool_call("group", {"polys": ["x^4 - 5*x^2 + 5"]})
    assert result["success"]
    assert result["order"] == 4
    assert result["abelian"]
    assert result["subgroups"] == 3


def test_galois_suite_passes(toolkit):
    result = toolkit.handle_tool_call("check", {"suite": "galois"})
    assert result["passed"], result["failed"]
    assert [job["id"] for job in result["jobs"]] == [
        "galois/class_sizes",
        "galois/degree_cap",
        "galois/extend_functoriality",
        "galois/fixed_fields",
        "galois/galois_correspondence",
        "galois/group_axioms",
        "galois/orbit_degree",
        "galois/projection_kernel",
        "galois/splitting_degrees",
    ]


def test_motive_tool_counts_repeated_scheme_components(toolkit):
    result = toolkit.handle_tool_call("motive", {"polys": ["x^2 - 2"], "schemes": ["x", "x"]})
    assert result["success"]
    assert result["dim"] == 2
    assert result["orbits"] == [[0], [1]]
    single = toolkit.handle_tool_call("motive", {"polys": ["x^2 - 2"], "schemes": ["x"]})
    assert single["dim"] == 1
