# main library settings/configs
import os
from pathlib import Path
from functools import lru_cache
from pydantic_settings import BaseSettings, SettingsConfigDict
from cv_uncertainty.config.settings_mixins import (
    GridSettingsMixin,
    ToleranceSettingsMixin,
    SpecialFunctionSettingsMixin,
    SweepSettingsMixin,
)

# Determine which environment we're in. Default to 'dev'.
APP_ENV = os.getenv("APP_ENV", "dev")

# This file is in src/cv_uncertainty/config/, so we go up three levels to the repo root.
# NOTE: the .env file names must match the APP_ENV config; a missing file just means defaults.
SERVICE_ROOT = Path(__file__).resolve().parents[3]
env_file_path = SERVICE_ROOT / f".env.{APP_ENV}"

class DefaultSettings(BaseSettings):
    """
    The baseline, default settings.
    Passed in last to set low priority (allows overrides).
    """
    model_config = SettingsConfigDict(env_file_encoding="utf-8", extra="ignore")

    APP_ENV: str = os.getenv("APP_ENV", "dev")

class ServiceSettings(
    GridSettingsMixin,
    ToleranceSettingsMixin,
    SpecialFunctionSettingsMixin,
    SweepSettingsMixin,
    DefaultSettings # passed in last to set low priority
):
    """
    The main library settings.
    Every value can be overridden with a CVU_-prefixed env var, e.g. CVU_HBAR=2.
    """
    # effective Planck constant used when a caller doesn't pass one explicitly
    HBAR: float = 1.0

    LOG_LEVEL: str = "INFO"

    model_config = SettingsConfigDict(
        env_file=env_file_path, env_file_encoding="utf-8", env_prefix="CVU_", extra="ignore"
    )

@lru_cache()
def get_service_settings() -> ServiceSettings:
    return ServiceSettings() # type: ignore
