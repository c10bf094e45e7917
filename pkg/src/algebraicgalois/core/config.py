# src/algebraicgalois/core/config.py
"""
Runtime settings read from the environment, optionally populated from a
``.env`` file. Command-line flags override every value here.
"""
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import find_dotenv, load_dotenv

from ..galois.ambient import DEFAULT_MAX_DEGREE

logger = logging.getLogger(__name__)

GLOBAL_ENV_PATH = Path.home() / ".algebraicgalois" / ".env"


def load_environment() -> Optional[str]:
    """
    Loads variables from the first .env found, without overriding values already set.
    Priority order:
    1. Any `.env` file found from the working directory upwards.
    2. Global `~/.algebraicgalois/.env`.
    """
    dotenv_path = find_dotenv(usecwd=True, raise_error_if_not_found=False)
    if dotenv_path:
        load_dotenv(dotenv_path, override=False)
        logger.debug(f"Loaded settings from {dotenv_path}")
        return dotenv_path
    if GLOBAL_ENV_PATH.exists():
        load_dotenv(dotenv_path=GLOBAL_ENV_PATH, override=False)
        logger.debug(f"Loaded settings from {GLOBAL_ENV_PATH}")
        return str(GLOBAL_ENV_PATH)
    return None


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}")
        return default
    if value < 1:
        logger.warning(f"Ignoring non-positive {name}={raw!r}")
        return default
    return value


@dataclass
class Settings:
    cache_dir: Optional[str] = None
    max_degree: int = DEFAULT_MAX_DEGREE
    workers: int = 1
    debug_log: Optional[str] = None

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            cache_dir=os.getenv("GALOIS_CACHE") or None,
            max_degree=_int_env("GALOIS_MAX_DEGREE", DEFAULT_MAX_DEGREE),
            workers=_int_env("GALOIS_WORKERS", 1),
            debug_log=os.getenv("GALOIS_DEBUG_LOG") or None,
        )

    def override(
        self, cache_dir: Optional[str] = None, max_degree: Optional[int] = None, workers: Optional[int] = None
    ) -> "Settings":
        return Settings(
            cache_dir=cache_dir or self.cache_dir,
            max_degree=max_degree or self.max_degree,
            workers=workers or self.workers,
            debug_log=self.debug_log,
        )
