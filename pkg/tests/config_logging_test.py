# tests for the settings layer and the run-id tagged package logger
import logging

import pytest

from cv_uncertainty.cli import SCENARIOS, ScenarioName, run_scenario
from cv_uncertainty.common.logging.logger import CustomLogger, get_run_id, logger, run_id_var
from cv_uncertainty.config.app_config import ServiceSettings, get_service_settings

@pytest.fixture
def fresh_settings():
    get_service_settings.cache_clear()
    yield
    get_service_settings.cache_clear()

def test_settings_defaults(fresh_settings, monkeypatch):
    for name in ("CVU_HBAR", "CVU_GRID_POINTS", "CVU_SWEEP_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    settings = get_service_settings()
    assert settings.HBAR == 1.0
    assert settings.LOG_LEVEL == "INFO"
    assert settings.GRID_POINTS == 4096
    assert settings.VERDICT_TOLERANCE == 1e-9
    assert settings.PROLATE_MIN_TRUNCATION == 16
    assert get_service_settings() is settings

def test_env_overrides_use_the_prefix(fresh_settings, monkeypatch):
    monkeypatch.setenv("CVU_GRID_POINTS", "2048")
    monkeypatch.setenv("CVU_SWEEP_WORKERS", "1")
    settings = get_service_settings()
    assert settings.GRID_POINTS == 2048
    assert settings.SWEEP_WORKERS == 1

def test_unprefixed_env_is_ignored(monkeypatch):
    monkeypatch.delenv("CVU_HBAR", raising=False)
    monkeypatch.setenv("HBAR", "3.0")
    assert ServiceSettings().HBAR == 1.0

# =====================================================================
# logging
# =====================================================================

def test_records_outside_a_run_carry_na(log_records):
    logger.info("outside any run")
    assert log_records[-1].run_id == "N/A"
    assert get_run_id() == ""

def test_scenario_runs_tag_their_records(log_records):
    run_scenario(SCENARIOS[ScenarioName.MUB_TABLE]())
    tagged = [record.run_id for record in log_records]
    assert tagged
    assert all(run_id.startswith("scenario:mub_table:") for run_id in tagged)
    assert len(set(tagged)) == 1
    # the run id is reset once the run ends
    assert run_id_var.get() == ""

def test_set_level_relevels_the_package_logger(log_records):
    try:
        CustomLogger.set_level("WARNING")
        logger.info("dropped")
        logger.warning("kept")
        assert [record.getMessage() for record in log_records] == ["kept"]
    finally:
        CustomLogger.set_level(logging.INFO)
    assert logger.level == logging.INFO

def test_get_logger_is_cached():
    assert CustomLogger.get_logger() is logger
    assert logger.propagate is False
