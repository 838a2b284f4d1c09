"""
Symperiod Environment Configuration and Validation
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from .logging import get_logger

logger = get_logger(__name__)

DEFAULT_SEED = 20130101
_LOG_FORMATS = ("json", "text")
_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    log_level: str = "INFO"
    log_format: str = "json"
    workers: int = 1
    seed: int = DEFAULT_SEED
    catalog_path: Optional[Path] = None


def _positive_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"{name} is not an integer, using {default}", extra={"error_type": "ValueError"})
        return default
    if value < 1:
        logger.warning(f"{name} must be positive, using {default}")
        return default
    return value


def load_settings(dotenv: bool = True) -> Settings:
    """
    Read settings from the environment, after an optional .env file.
    Malformed values fall back to defaults with a warning.
    """
    if dotenv:
        load_dotenv(override=False)

    level = os.environ.get("SYMPERIOD_LOG_LEVEL", "INFO").upper()
    if level not in _LOG_LEVELS:
        logger.warning(f"Unknown SYMPERIOD_LOG_LEVEL {level!r}, using INFO")
        level = "INFO"

    fmt = os.environ.get("SYMPERIOD_LOG_FORMAT", "json").lower()
    if fmt not in _LOG_FORMATS:
        logger.warning(f"Unknown SYMPERIOD_LOG_FORMAT {fmt!r}, using json")
        fmt = "json"

    seed_raw = os.environ.get("SYMPERIOD_SEED")
    seed = DEFAULT_SEED
    if seed_raw:
        try:
            seed = int(seed_raw)
        except ValueError:
            logger.warning(f"SYMPERIOD_SEED is not an integer, using {DEFAULT_SEED}")

    catalog_raw = os.environ.get("SYMPERIOD_CATALOG")
    catalog_path = Path(catalog_raw) if catalog_raw else None

    return Settings(
        log_level=level,
        log_format=fmt,
        workers=_positive_int("SYMPERIOD_WORKERS", 1),
        seed=seed,
        catalog_path=catalog_path,
    )


def validate_environment() -> Settings:
    """
    Validates the environment on startup.
    Logs warnings for missing or unusable configuration; never raises.
    """
    logger.info("Validating symperiod environment")
    settings = load_settings()

    if settings.catalog_path is not None and not settings.catalog_path.is_file():
        logger.warning(
            "SYMPERIOD_CATALOG does not point at a file, the embedded catalog will be used",
            extra={"error_type": "FileNotFoundError"},
        )
        settings = Settings(
            log_level=settings.log_level,
            log_format=settings.log_format,
            workers=settings.workers,
            seed=settings.seed,
        )

    logger.info("Environment configuration validation complete", extra={"workers": settings.workers})
    return settings
