"""
Library and CLI configuration loaded from environment variables.

Uses pydantic-settings for type-safe configuration management.
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class Settings(BaseSettings):
    """
    Settings loaded from ``DEDEKIND_*`` environment variables or a local .env file.

    Attributes:
        oracle_cap: Largest n the naive summation oracle accepts.
        default_digits: Digits shown in truncated decimal renderings.
        verify_workers: Worker threads used by the verification suites.
        assert_closed_form: Cross-check the closed form against the evaluator.
        oracle_max_n: Exhaustive bound of the oracle suite.
        oracle_random_max_n: Upper bound on n for random oracle pairs.
        log_level: Root logging level used by the CLI.
    """

    model_config = SettingsConfigDict(
        env_prefix="DEDEKIND_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    oracle_cap: int = Field(default=10**6, ge=1)
    default_digits: int = Field(default=12, ge=0)
    verify_workers: int = Field(default=1, ge=1)
    assert_closed_form: bool = True

    oracle_max_n: int = Field(default=200, ge=1)
    oracle_random_max_n: int = Field(default=10**6, ge=1)

    log_level: LogLevel = "WARNING"

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_log_level(cls, value):
        return value.upper() if isinstance(value, str) else value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Returns:
        Settings: Settings singleton.
    """
    return Settings()
