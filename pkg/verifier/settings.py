"""
Settings
Environment configuration (read through python-dotenv) and the per-run suite configuration
"""

import logging
import os
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

from dotenv import find_dotenv, load_dotenv

from affine_weyl.bruhat import DEFAULT_LENGTH_CAP
from affine_weyl.errors import ConfigurationError
from bernstein_characters.multiplicities import DEFAULT_DIMENSION_CAP

ENV_CACHE_DIR = "AFFINE_KL_CACHE_DIR"
ENV_LENGTH_CAP = "AFFINE_KL_LENGTH_CAP"
ENV_DIMENSION_CAP = "AFFINE_KL_DIMENSION_CAP"
ENV_LOG_LEVEL = "AFFINE_KL_LOG_LEVEL"

DEFAULT_DATUM = "SL:3"
DEFAULT_MAX_COORD = 2
DEFAULT_SEED = 0
DEFAULT_COUNT = 100


@dataclass(frozen=True)
class Settings:
    cache_dir: Optional[str] = None
    length_cap: int = DEFAULT_LENGTH_CAP
    dimension_cap: int = DEFAULT_DIMENSION_CAP
    log_level: str = "INFO"


def _int_variable(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got '{raw}'")
    if value < 0:
        raise ConfigurationError(f"{name} must be non-negative, got {value}")
    return value


def load_settings() -> Settings:
    """Read the AFFINE_KL_* variables; a .env file in the working directory fills in unset ones"""
    load_dotenv(find_dotenv(usecwd=True))
    log_level = (os.getenv(ENV_LOG_LEVEL) or "INFO").upper()
    if not isinstance(logging.getLevelName(log_level), int):
        raise ConfigurationError(f"{ENV_LOG_LEVEL} must be a logging level name, got '{log_level}'")
    return Settings(
        cache_dir=os.getenv(ENV_CACHE_DIR) or None,
        length_cap=_int_variable(ENV_LENGTH_CAP, DEFAULT_LENGTH_CAP),
        dimension_cap=_int_variable(ENV_DIMENSION_CAP, DEFAULT_DIMENSION_CAP),
        log_level=log_level,
    )


@dataclass(frozen=True)
class SuiteConfig:
    """Everything that determines the content of a report"""
    datum: str = DEFAULT_DATUM
    max_len: int = 0
    seed: int = DEFAULT_SEED
    count: int = DEFAULT_COUNT
    jobs: int = 1
    output: Optional[str] = None
    max_coord: int = DEFAULT_MAX_COORD
    record_timings: bool = False
    length_cap: int = DEFAULT_LENGTH_CAP
    dimension_cap: int = DEFAULT_DIMENSION_CAP

    def __post_init__(self):
        if self.jobs < 1:
            raise ConfigurationError(f"jobs must be at least 1, got {self.jobs}")
        if self.max_len < 0 or self.count < 0 or self.max_coord < 0:
            raise ConfigurationError("max_len, count and max_coord must be non-negative")

    def to_dict(self) -> Dict[str, Any]:
        """JSON form embedded in reports; jobs and output do not affect report content"""
        data = asdict(self)
        data.pop("jobs")
        data.pop("output")
        return data
