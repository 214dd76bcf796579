"""
Run-time defaults for pbwforge.

Defaults live in config/pbwforge_settings.json; a local .env may set
PBWFORGE_THREADS to cap every thread pool.
"""
from __future__ import annotations

import json
import logging
import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.errors import InputError
from src.utils.paths import get_config_dir


class Settings(BaseModel):
    """Numeric defaults; margin and degbound are offsets added to N and 2N."""
    maxdeg: int = Field(6, ge=0, le=16)
    margin_offset: int = Field(2, ge=0)
    degbound_offset: int = Field(2, ge=0)
    size_guard: int = Field(10_000_000, gt=0)
    seed: int = 0
    random_runs: int = Field(20, ge=1)
    threads: Optional[int] = Field(None, ge=1)
    model_config = ConfigDict(extra="forbid")

    def default_margin(self, N: int) -> int:
        return N + self.margin_offset

    def default_degbound(self, N: int) -> int:
        return 2 * N + self.degbound_offset


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    load_dotenv()
    path = get_config_dir() / "pbwforge_settings.json"
    data = {}
    if path.exists():
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    else:
        logging.warning(f"{path} not found, using built-in defaults")
    try:
        return Settings.model_validate(data)
    except ValidationError as e:
        loc = ".".join(str(p) for p in e.errors()[0]["loc"])
        raise InputError(e.errors()[0]["msg"], path=f"pbwforge_settings.{loc}") from None


def max_threads() -> int:
    """Thread cap: PBWFORGE_THREADS, then the settings file, then min(4, cpus)."""
    get_settings()
    if env := os.getenv("PBWFORGE_THREADS"):
        try:
            value = int(env)
        except ValueError:
            raise InputError(f"PBWFORGE_THREADS must be an integer, got '{env}'") from None
        if value < 1:
            raise InputError("PBWFORGE_THREADS must be at least 1")
        return value
    if get_settings().threads:
        return get_settings().threads
    return min(4, os.cpu_count() or 1)
