# src/algebraicgalois/core/cache.py
"""
This module provides a thread-safe singleton manager for on-disk caches of
ambient Galois fields, keyed by the canonical form of their defining polynomials.
"""
import hashlib
import json
import logging
import os
import tempfile
import threading
from pathlib import Path
from typing import Dict, Optional, Sequence, Tuple

from ..algebra.parsing import format_polynomial
from ..algebra.polynomial import Polynomial
from ..galois.ambient import DEFAULT_MAX_DEGREE, AmbientGaloisField, canonical_polynomials, splitting_field
from .errors import CorruptCache, DegreeCapExceeded, GaloisError

logger = logging.getLogger(__name__)

CACHE_FORMAT = 1


def cache_key(polys: Sequence[Polynomial]) -> str:
    """sha256 of the sorted canonical defining polynomials."""
    text = "\n".join(format_polynomial(f) for f in canonical_polynomials(polys))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _canonical_bytes(payload: dict) -> bytes:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")


class AmbientStore:
    """One cache directory. Entries are ``<key>.json`` files written atomically."""

    def __init__(self, directory: Path):
        self.directory = Path(directory).expanduser()
        self.directory.mkdir(parents=True, exist_ok=True)

    def path_for(self, polys: Sequence[Polynomial]) -> Path:
        return self.directory / f"{cache_key(polys)}.json"

    def load(self, polys: Sequence[Polynomial]) -> Optional[AmbientGaloisField]:
        """
        Returns the cached ambient, or None on a miss.

        Raises:
            CorruptCache: if the entry cannot be parsed, its digest does not match,
                or the stored field fails validation.
        """
        path = self.path_for(polys)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
            digest = data.pop("digest")
            if hashlib.sha256(_canonical_bytes(data)).hexdigest() != digest:
                raise CorruptCache("cache digest mismatch", {"path": str(path)})
            if data.get("format") != CACHE_FORMAT:
                raise CorruptCache("unknown cache format", {"path": str(path)})
            ambient = AmbientGaloisField.from_json(data["ambient"])
        except CorruptCache:
            raise
        except (ValueError, KeyError, TypeError, AttributeError, GaloisError) as e:
            raise CorruptCache(f"unreadable cache entry: {e}", {"path": str(path)})
        if [format_polynomial(f) for f in ambient.polys] != [
            format_polynomial(f) for f in canonical_polynomials(polys)
        ]:
            raise CorruptCache("cache entry belongs to other polynomials", {"path": str(path)})
        logger.info(f"Loaded ambient field of degree {ambient.degree} from {path}")
        return ambient

    def save(self, ambient: AmbientGaloisField) -> Path:
        path = self.path_for(ambient.polys)
        payload = {"format": CACHE_FORMAT, "ambient": ambient.to_json()}
        payload["digest"] = hashlib.sha256(_canonical_bytes(payload)).hexdigest()
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(payload, f, sort_keys=True, indent=2)
            os.replace(tmp, path)
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        logger.info(f"Stored ambient field in {path}")
        return path

    def get_or_build(
        self, polys: Sequence[Polynomial], max_degree: int = DEFAULT_MAX_DEGREE
    ) -> Tuple[AmbientGaloisField, bool]:
        """The ambient for ``polys`` and whether it came from the cache."""
        try:
            ambient = self.load(polys)
        except CorruptCache as e:
            logger.warning(f"{e.message}; recomputing ({e.details.get('path')})")
            ambient = None
        if ambient is not None:
            if ambient.degree > max_degree:
                raise DegreeCapExceeded(
                    f"cached splitting field has degree {ambient.degree} > {max_degree}",
                    {"degree": ambient.degree, "max_degree": max_degree},
                )
            return ambient, True
        ambient = splitting_field(polys, max_degree)
        try:
            self.save(ambient)
        except OSError as e:
            logger.warning(f"Could not write cache entry: {e}")
        return ambient, False


class CacheManager:
    """
    Hands out one AmbientStore per directory. A singleton so that concurrent
    callers in one process share stores; across processes the atomic rename keeps
    entries whole.
    """
    _instance = None
    _lock = threading.Lock()

    def __new__(cls):
        if cls._instance is None:
            with cls._lock:
                # Double-check locking to prevent race conditions.
                if cls._instance is None:
                    cls._instance = super(CacheManager, cls).__new__(cls)
        return cls._instance

    def __init__(self):
        if hasattr(self, "_initialized"):
            return
        self._stores: Dict[str, AmbientStore] = {}
        self._initialized = True

    def get_store(self, directory: Optional[str] = None) -> Optional[AmbientStore]:
        """Store for ``directory`` or ``GALOIS_CACHE``; None when neither is set."""
        directory = directory or os.getenv("GALOIS_CACHE")
        if not directory:
            return None
        key = str(Path(directory).expanduser().resolve())
        with self._lock:
            if key not in self._stores:
                self._stores[key] = AmbientStore(Path(key))
            return self._stores[key]


def load_ambient(
    polys: Sequence[Polynomial], max_degree: int = DEFAULT_MAX_DEGREE, cache_dir: Optional[str] = None
) -> Tuple[AmbientGaloisField, bool]:
    """Splitting field through the cache when one is configured."""
    store = CacheManager().get_store(cache_dir)
    if store is None:
        return splitting_field(polys, max_degree), False
    return store.get_or_build(polys, max_degree)
