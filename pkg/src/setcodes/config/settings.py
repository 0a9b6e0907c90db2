# setcodes/config/settings.py
from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from dotenv import load_dotenv

from setcodes.config.default import (
    DEFAULT_GUARD,
    DEFAULT_LOG_LEVEL,
    DEFAULT_WORKERS,
    ENV_PREFIX,
)

load_dotenv()


def env(name: str, default: str | None = None) -> str | None:
    """Read ``SETCODES_<name>`` from the environment."""
    return os.getenv(f"{ENV_PREFIX}{name}", default)


def _env_int(name: str, default: int) -> int:
    raw = env(name)
    return int(raw) if raw not in (None, "") else default


def _env_path(name: str) -> Path | None:
    raw = env(name)
    return Path(raw) if raw else None


# ──────────────────────────────────────────────────────────────
# Settings
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Settings:
    log_level: str | int = field(default_factory=lambda: env("LOG_LEVEL", DEFAULT_LOG_LEVEL))
    guard: int = field(default_factory=lambda: _env_int("GUARD", DEFAULT_GUARD))
    cache_dir: Path | None = field(default_factory=lambda: _env_path("CACHE_DIR"))
    workers: int = field(default_factory=lambda: _env_int("WORKERS", DEFAULT_WORKERS))


def resolve_settings(settings: Settings | dict | None) -> Settings:
    # normalize settings: accept dataclass or dict or None
    if settings is None:
        return Settings()
    if isinstance(settings, Settings):
        return settings
    if isinstance(settings, dict):
        return Settings(**settings)
    raise TypeError("settings must be Settings | dict | None")
