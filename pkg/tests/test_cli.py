import json
import os
import re
import subprocess
import sys
from pathlib import Path

import pytest
from typer.testing import CliRunner

from algebraicgalois.cli.main import app

SRC_PATH = str(Path(__file__).resolve().parent.parent / "src")

runner = CliRunner()


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    """Run every command from an empty directory without GALOIS_* settings."""
    for name in ("GALOIS_CACHE", "GALOIS_MAX_DEGREE", "GALOIS_WORKERS", "GALOIS_DEBUG_LOG"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


def invoke(*args):
    return runner.invoke(app, list(args))


def results(result):
    return json.loads(result.stdout)["results"]


def test_split():
    result = invoke("split", "--poly", "x^3-2")
    assert result.exit_code == 0, result.stdout
    data = results(result)
    assert data["degree"] == 6
    assert data["group_order"] == 6
    assert all(data["verified"].values())


def test_split_is_deterministic():
    first = json.loads(invoke("split", "--poly", "x^2-2", "--poly", "x^2-3").stdout)
    second = json.loads(invoke("split", "--poly", "x^2-3", "--poly", "x^2-2").stdout)
    for report in (first, second):
        report.pop("timing")
        report.pop("command")
    assert first == second


def test_out_file_matches_stdout(tmp_path):
    target = tmp_path / "report.json"
    result = invoke("group", "--poly", "x^3-2", "--out", str(target))
    assert result.exit_code == 0
    assert target.read_text(encoding="utf-8") == result.stdout
    assert sorted(c["size"] for c in results(result)["classes"]) == [1, 2, 3]


def test_parse_error_is_a_usage_error():
    assert invoke("split", "--poly", "x^2 + y").exit_code == 2


def test_oversized_polynomial_is_a_usage_error():
    assert invoke("split", "--poly", "x^3000-2").exit_code == 2
    assert invoke("split", "--poly", "x^30-2").exit_code == 1


def test_non_prime_is_a_usage_error():
    assert invoke("frobenius", "--poly", "x^3-2", "-p", "6").exit_code == 2


def test_frobenius_needs_exactly_one_mode():
    assert invoke("frobenius", "--poly", "x^3-2").exit_code == 2
    assert invoke("frobenius", "--poly", "x^3-2", "-p", "5", "--infinite").exit_code == 2


def test_bad_sweep_is_a_usage_error():
    assert invoke("frobenius", "--poly", "x^3-2", "--sweep", "50..10").exit_code == 2


def test_ramified_prime_is_a_domain_error():
    result = invoke("frobenius", "--poly", "x^3-2", "-p", "3")
    assert result.exit_code == 1
    assert results(result)["error"]["code"] == "ramified_or_bad_prime"


def test_frobenius_at_a_prime():
    result = invoke("frobenius", "--poly", "x^3-2", "-p", "7")
    assert result.exit_code == 0
    record = results(result)["frobenius"]
    assert record["cycle_types"] == [[3]]
    assert record["dedekind"]
    assert all(record["certificates"].values())


def test_frobenius_sweep():
    result = invoke("frobenius", "--poly", "x^3-2", "--sweep", "2..50", "--workers", "2")
    assert result.exit_code == 0
    data = results(result)
    assert data["ramified"] == [2, 3]
    assert [r["p"] for r in data["records"]] == [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def test_frobenius_at_infinity():
    assert results(invoke("frobenius", "--poly", "x^2-2", "--infinite"))["identity"]
    result = invoke("frobenius", "--poly", "x^3-2", "--infinite")
    assert result.exit_code == 1
    assert results(result)["error"]["code"] == "ramified_infinite_place"


def test_coordinate_ring_over_subfield():
    result = invoke("coordinate-ring", "--poly", "x^3-2", "--over", "x^2+3")
    assert result.exit_code == 0
    data = results(result)
    assert data["ring"]["dim"] == 3
    assert all(data["checks"].values())
    plain = results(invoke("coordinate-ring", "--poly", "x^3-2", "--no-hopf"))
    assert "delta" not in plain["ring"]


def test_points():
    data = results(invoke("points", "--poly", "x^3-2"))
    assert data["count"] == 6
    assert all(data["group_law"].values())
    assert results(invoke("points", "--poly", "x^3-2", "--at", "Q"))["count"] == 1


def test_restrict():
    data = results(invoke("restrict", "--poly", "x^3-2", "--extend", "x^2-2"))
    assert data["target_degree"] == 12
    assert data["embeddings"] == 6
    assert data["identical"]
    tower = results(invoke("restrict", "--poly", "x^3-2", "--poly", "x^2-2"))
    assert [level["degree"] for level in tower["tower"]["levels"]] == [1, 2, 6, 12]


def test_motive_report():
    result = invoke("motive", "--poly", "x^3-2", "--scheme", "x^3-2", "--report")
    assert result.exit_code == 0
    data = results(result)
    assert data["dim"] == 3
    assert data["dr_dim"] == 3
    assert data["comodule_ok"]
    assert data["gamma_iso_ok"]


def test_motive_needs_split_scheme():
    result = invoke("motive", "--poly", "x^3-2", "--scheme", "x^2-5")
    assert result.exit_code == 1
    assert results(result)["error"]["code"] == "ambient_mismatch"


def test_dr_regular():
    data = results(invoke("dr", "--poly", "x^3-2", "--regular"))
    assert data["dim"] == 6
    assert all(data["checks"].values())


def test_check_suite():
    result = invoke("check", "--suite", "algebra")
    assert result.exit_code == 0
    data = results(result)
    assert data["passed"]
    assert data["total"] == 7
    assert "algebra/divmod_identity" in [job["id"] for job in data["jobs"]]
    assert invoke("check", "--suite", "nope").exit_code == 2


def _without_timing(text):
    return re.sub(r'"timing": \{[^}]*\}', '"timing": {}', text)


def test_check_all_passes_and_is_deterministic():
    first = invoke("check", "--suite", "all")
    assert first.exit_code == 0, first.stdout
    data = results(first)
    assert data["passed"], data["failed"]
    assert {job["suite"] for job in data["jobs"]} == {"algebra", "galois", "groupscheme", "frobenius", "motives", "cli"}
    second = invoke("check", "--suite", "all")
    assert _without_timing(first.stdout) == _without_timing(second.stdout)


def test_degree_cap_flag():
    result = invoke("split", "--poly", "x^3-2", "--max-degree", "4")
    assert result.exit_code == 1
    assert results(result)["error"]["code"] == "degree_cap_exceeded"


def test_ambient_cache_flag(tmp_path):
    cache = tmp_path / "cache"
    first = results(invoke("split", "--poly", "x^2-2", "--ambient-cache", str(cache)))
    second = results(invoke("split", "--poly", "x^2-2", "--ambient-cache", str(cache)))
    assert not first["cache_hit"]
    assert second["cache_hit"]


def test_list_and_version():
    assert invoke("list").exit_code == 0
    assert invoke("version").exit_code == 0
    assert invoke("--version").exit_code == 0


def test_module_entry_point():
    env = dict(os.environ, PYTHONPATH=SRC_PATH)
    completed = subprocess.run(
        [sys.executable, "-m", "algebraicgalois", "split", "--poly", "x^2-2"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert completed.returncode == 0, completed.stderr
    assert json.loads(completed.stdout)["results"]["degree"] == 2
