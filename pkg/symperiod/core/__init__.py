"""
Symperiod Core -- cross-cutting concerns.

Logging, configuration, the error hierarchy and the sweep worker pool.
"""

from .logging import get_logger, set_run_id, get_run_id, TimedOperation
from .config import Settings, load_settings, validate_environment
from .errors import SymperiodError
from .parallel import parallel_map

__all__ = [
    "get_logger",
    "set_run_id",
    "get_run_id",
    "TimedOperation",
    "Settings",
    "load_settings",
    "validate_environment",
    "SymperiodError",
    "parallel_map",
]
