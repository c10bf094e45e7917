import json
from datetime import datetime
from fractions import Fraction

import pytest

from algebraicgalois.core.cache import AmbientStore, CacheManager, cache_key, load_ambient
from algebraicgalois.core.config import Settings
from algebraicgalois.core.errors import CorruptCache, DegreeCapExceeded, RamifiedOrBadPrime
from algebraicgalois.core.jobs import JobManager, JobStatus
from algebraicgalois.core.report import PhaseTimer, build_report, dumps_report, to_jsonable

from .conftest import poly


# ---------------------------------------------------------------------- cache


def test_cache_key_is_order_independent():
    a = cache_key([poly("x^3 - 2"), poly("x^2 - 2")])
    b = cache_key([poly("x^2 - 2"), poly("x^3 - 2")])
    assert a == b
    assert a != cache_key([poly("x^2 - 2")])


def test_cache_miss_then_hit(cache_dir):
    polys = [poly("x^2 - 2")]
    first, hit = load_ambient(polys, cache_dir=str(cache_dir))
    assert not hit
    second, hit = load_ambient(polys, cache_dir=str(cache_dir))
    assert hit
    assert second == first
    assert len(list(cache_dir.glob("*.json"))) == 1


def test_tampered_cache_is_recomputed(cache_dir):
    polys = [poly("x^2 - 2")]
    store = AmbientStore(cache_dir)
    ambient, _ = store.get_or_build(polys)
    path = store.path_for(polys)
    data = json.loads(path.read_text(encoding="utf-8"))
    data["ambient"]["autos"] = list(reversed(data["ambient"]["autos"]))
    path.write_text(json.dumps(data), encoding="utf-8")

    with pytest.raises(CorruptCache):
        store.load(polys)
    rebuilt, hit = store.get_or_build(polys)
    assert not hit
    assert rebuilt == ambient
    assert store.load(polys) == ambient


def test_unreadable_cache_entry(cache_dir):
    polys = [poly("x^2 - 3")]
    store = AmbientStore(cache_dir)
    store.path_for(polys).write_text("{not json", encoding="utf-8")
    with pytest.raises(CorruptCache):
        store.load(polys)


def test_cached_ambient_respects_degree_cap(cache_dir):
    polys = [poly("x^3 - 2")]
    store = AmbientStore(cache_dir)
    store.get_or_build(polys)
    with pytest.raises(DegreeCapExceeded):
        store.get_or_build(polys, max_degree=4)


def test_cache_manager_is_singleton(cache_dir):
    assert CacheManager() is CacheManager()
    assert CacheManager().get_store(str(cache_dir)) is CacheManager().get_store(str(cache_dir))
    assert CacheManager().get_store(None) is None


# ---------------------------------------------------------------------- config


def test_settings_from_env(monkeypatch, cache_dir):
    monkeypatch.setenv("GALOIS_CACHE", str(cache_dir))
    monkeypatch.setenv("GALOIS_MAX_DEGREE", "12")
    monkeypatch.setenv("GALOIS_WORKERS", "not-a-number")
    settings = Settings.from_env()
    assert settings.cache_dir == str(cache_dir)
    assert settings.max_degree == 12
    assert settings.workers == 1
    overridden = settings.override(max_degree=6, workers=3)
    assert (overridden.max_degree, overridden.workers, overridden.cache_dir) == (6, 3, str(cache_dir))


# ---------------------------------------------------------------------- report


def test_to_jsonable(n6):
    assert to_jsonable(Fraction(3, 4)) == "3/4"
    assert to_jsonable(poly("x^3 - 2")) == "x^3 - 2"
    assert to_jsonable(n6.field.one) == n6.field.one.to_json()
    assert to_jsonable(JobStatus.FAILED) == "failed"
    assert to_jsonable({1: (Fraction(1), True)}) == {"1": ["1", True]}
    assert to_jsonable(RamifiedOrBadPrime("p = 3", {"p": 3}).to_dict())["code"] == "ramified_or_bad_prime"


def test_report_is_canonical():
    timer = PhaseTimer()
    with timer.phase("work"):
        pass
    report = build_report({"tool": "split", "polys": ["x^2 - 2"]}, {"b": 1, "a": Fraction(1, 2)}, timer.phases)
    text = dumps_report(report)
    assert text.endswith("\n")
    data = json.loads(text)
    assert data["schema_version"] == "1.0"
    assert list(data["results"]) == ["a", "b"]
    assert "work" in data["timing"]
    assert "timing" not in json.loads(dumps_report(report, include_timing=False))


# ---------------------------------------------------------------------- jobs


def test_job_manager():
    manager = JobManager()
    blocking = manager.create_job("galois", "degrees")
    optional = manager.create_job("frobenius", "chebotarev", blocking=False)
    assert blocking == "galois/degrees"
    manager.update_job(blocking, status=JobStatus.COMPLETED, end_time=datetime.now())
    manager.update_job(optional, status=JobStatus.COMPLETED, errors=["check did not hold"])
    assert manager.get_job(blocking).passed
    assert manager.get_job(blocking).duration_ms >= 0
    assert [j.job_id for j in manager.list_jobs()] == ["frobenius/chebotarev", "galois/degrees"]
    assert manager.failed_blocking() == []
    assert [j.job_id for j in manager.warnings()] == ["frobenius/chebotarev"]
    assert manager.get_job(optional).to_json()["status"] == "completed"
