import io
import json
import logging

import pytest

from app.models.hemiring import verify_axioms
from app.utils.config import WorkbenchConfig
from app.utils.errors import AxiomError, InputError, NonConstantRequiredError, OracleMismatchError
from app.utils.logger import LoggerConfig, get_logger


@pytest.fixture
def log_stream():
    stream = io.StringIO()
    LoggerConfig.setup_logging(level="DEBUG", format_type="json", stream=stream)
    yield stream
    LoggerConfig.setup_logging()


def test_structured_fields_are_emitted(log_stream):
    get_logger("workbench.test").info("Проверка", structure="ex66", count=3)
    record = json.loads(log_stream.getvalue().splitlines()[-1])
    assert record["level"] == "INFO"
    assert record["logger"] == "workbench.test"
    assert record["message"] == "Проверка"
    assert record["structure"] == "ex66" and record["count"] == 3


def test_exception_is_serialised(log_stream):
    try:
        raise ValueError("boom")
    except ValueError:
        get_logger("workbench.test").exception("Сбой", step="x")
    record = json.loads(log_stream.getvalue().splitlines()[-1])
    assert record["level"] == "ERROR"
    assert "ValueError: boom" in record["exception"]


def test_level_filters_records():
    stream = io.StringIO()
    LoggerConfig.setup_logging(level="WARNING", format_type="standard", stream=stream)
    try:
        logger = get_logger("workbench.test")
        logger.info("скрыто")
        logger.warning("видно")
        assert "скрыто" not in stream.getvalue()
        assert "WARNING" in stream.getvalue()
        assert logging.getLogger().level == logging.WARNING
    finally:
        LoggerConfig.setup_logging()


def test_config_defaults():
    config = WorkbenchConfig()
    assert config.denominator == 20
    assert config.output_format == "human"


def test_config_from_env(monkeypatch):
    monkeypatch.setenv("HEMIRING_DENOMINATOR", "10")
    monkeypatch.setenv("HEMIRING_SAMPLE_SEED", "7")
    config = WorkbenchConfig.from_env()
    assert config.denominator == 10
    assert config.sample_seed == 7
    assert WorkbenchConfig.from_env(denominator=4, log_level=None).denominator == 4


def test_invalid_config(monkeypatch):
    monkeypatch.setenv("HEMIRING_DENOMINATOR", "zero")
    with pytest.raises(InputError):
        WorkbenchConfig.from_env()
    with pytest.raises(InputError):
        WorkbenchConfig().with_updates(max_triples=0)


def test_exit_codes(ex67):
    assert InputError("x").exit_code == 2
    assert NonConstantRequiredError().detail == "non-constant required"
    assert OracleMismatchError("x").exit_code == 1
    error = AxiomError(verify_axioms(ex67.tables))
    assert error.exit_code == 1
    assert error.detail.startswith("axiom check failed: left_distributive")
