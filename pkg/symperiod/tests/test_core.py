"""
Symperiod Test Suite -- Core Module Tests.

Covers:
    - Logging (get_logger, set_run_id, StructuredJSONFormatter, TimedOperation)
    - Configuration (load_settings, validate_environment)
    - Error hierarchy
    - Worker pool (parallel_map)
"""

import json
import logging

import pytest

# ─────────────────────────────────────────────────────────────
# Logging
# ─────────────────────────────────────────────────────────────

from symperiod.core.logging import (
    StructuredJSONFormatter,
    TimedOperation,
    configure_logging,
    get_logger,
    get_run_id,
    set_run_id,
)


class TestLogging:
    def test_get_logger_namespace(self):
        logger = get_logger("symperiod.test")
        assert logger.name == "symperiod.test"

    def test_set_run_id_generates(self):
        rid = set_run_id()
        assert len(rid) == 12
        assert get_run_id() == rid

    def test_set_run_id_explicit(self):
        assert set_run_id("run-42") == "run-42"
        assert get_run_id() == "run-42"

    def test_json_formatter_fields(self):
        set_run_id("fmt-test")
        record = logging.LogRecord(
            name="symperiod.topology",
            level=logging.INFO,
            pathname="periodicity.py",
            lineno=10,
            msg="classified",
            args=(),
            exc_info=None,
        )
        record.space = "GrR(3,8)"
        record.verdict = "Fails"
        entry = json.loads(StructuredJSONFormatter().format(record))
        assert entry["message"] == "classified"
        assert entry["level"] == "INFO"
        assert entry["run_id"] == "fmt-test"
        assert entry["space"] == "GrR(3,8)"
        assert entry["verdict"] == "Fails"
        assert "degree" not in entry

    def test_timed_operation_records_duration(self):
        logger = get_logger("symperiod.test.timing")
        with TimedOperation(logger, "unit", degree=16) as op:
            op.extra["cases"] = 3
        assert op.duration_ms is not None
        assert op.duration_ms >= 0
        assert op.extra == {"degree": 16, "cases": 3}

    def test_timed_operation_does_not_swallow(self):
        logger = get_logger("symperiod.test.timing")
        with pytest.raises(RuntimeError):
            with TimedOperation(logger, "boom"):
                raise RuntimeError("boom")

    def test_get_logger_keeps_explicit_level(self):
        root = logging.getLogger("symperiod")
        previous = root.level
        try:
            configure_logging(level="ERROR")
            get_logger("symperiod.test.quiet")
            import symperiod.catalog.loader  # noqa: F401

            assert root.level == logging.ERROR
        finally:
            root.setLevel(previous)


# ─────────────────────────────────────────────────────────────
# Configuration
# ─────────────────────────────────────────────────────────────

from symperiod.core.config import DEFAULT_SEED, load_settings, validate_environment

_ENV = (
    "SYMPERIOD_LOG_LEVEL",
    "SYMPERIOD_LOG_FORMAT",
    "SYMPERIOD_WORKERS",
    "SYMPERIOD_SEED",
    "SYMPERIOD_CATALOG",
)


@pytest.fixture
def clean_env(monkeypatch):
    for name in _ENV:
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


class TestSettings:
    def test_defaults(self, clean_env):
        s = load_settings(dotenv=False)
        assert s.log_level == "INFO"
        assert s.log_format == "json"
        assert s.workers == 1
        assert s.seed == DEFAULT_SEED
        assert s.catalog_path is None

    def test_reads_environment(self, clean_env):
        clean_env.setenv("SYMPERIOD_WORKERS", "4")
        clean_env.setenv("SYMPERIOD_SEED", "7")
        clean_env.setenv("SYMPERIOD_LOG_LEVEL", "debug")
        clean_env.setenv("SYMPERIOD_LOG_FORMAT", "TEXT")
        s = load_settings(dotenv=False)
        assert s.workers == 4
        assert s.seed == 7
        assert s.log_level == "DEBUG"
        assert s.log_format == "text"

    def test_malformed_values_fall_back(self, clean_env):
        clean_env.setenv("SYMPERIOD_WORKERS", "many")
        clean_env.setenv("SYMPERIOD_SEED", "x")
        clean_env.setenv("SYMPERIOD_LOG_LEVEL", "LOUD")
        clean_env.setenv("SYMPERIOD_LOG_FORMAT", "xml")
        s = load_settings(dotenv=False)
        assert s.workers == 1
        assert s.seed == DEFAULT_SEED
        assert s.log_level == "INFO"
        assert s.log_format == "json"

    def test_nonpositive_workers(self, clean_env):
        clean_env.setenv("SYMPERIOD_WORKERS", "0")
        assert load_settings(dotenv=False).workers == 1

    def test_validate_drops_missing_catalog(self, clean_env, tmp_path):
        clean_env.setenv("SYMPERIOD_CATALOG", str(tmp_path / "missing.json"))
        assert validate_environment().catalog_path is None

    def test_validate_keeps_existing_catalog(self, clean_env, tmp_path):
        path = tmp_path / "catalog.json"
        path.write_text("{}", encoding="utf-8")
        clean_env.setenv("SYMPERIOD_CATALOG", str(path))
        assert validate_environment().catalog_path == path


# ─────────────────────────────────────────────────────────────
# Errors
# ─────────────────────────────────────────────────────────────

from symperiod.core import errors


class TestErrors:
    def test_input_errors_are_value_errors(self):
        for cls in (
            errors.InvalidParameter,
            errors.PreconditionViolation,
            errors.RankDeficient,
            errors.MatrixFormatError,
            errors.ExpressionSyntaxError,
            errors.DegreeCapExceeded,
        ):
            assert issubclass(cls, errors.SymperiodError)
            assert issubclass(cls, ValueError)

    def test_unknown_betti_message(self):
        exc = errors.UnknownBetti(7, "AI(6)")
        assert exc.degree == 7
        assert "b_7" in str(exc)
        assert "AI(6)" in str(exc)

    def test_unknown_betti_is_lookup_error(self):
        with pytest.raises(LookupError):
            raise errors.UnknownBetti(3)


# ─────────────────────────────────────────────────────────────
# Worker pool
# ─────────────────────────────────────────────────────────────

from symperiod.core.parallel import parallel_map


class TestParallelMap:
    def test_inline(self):
        assert parallel_map(lambda x: x * x, range(5)) == [0, 1, 4, 9, 16]

    def test_threaded_keeps_order(self):
        assert parallel_map(lambda x: -x, range(100), workers=4) == [-x for x in range(100)]

    def test_empty(self):
        assert parallel_map(str, [], workers=3) == []
