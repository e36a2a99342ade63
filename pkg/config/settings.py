"""
Centralized configuration management using Pydantic Settings.
All configuration is loaded from environment variables (prefix TERRACINI_) or .env file.
"""

import os
from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Largest prime below 2^62.
DEFAULT_PRIME = 2**62 - 57


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="TERRACINI_",
        case_sensitive=False,
        extra="ignore"
    )

    # Application
    app_name: str = "Terracini Matroids"
    app_version: str = "1.0.0"
    debug: bool = False
    log_level: str = "WARNING"

    # Sampling
    seed: int = 0
    trials: int = Field(default=3, ge=1)
    prime: int = DEFAULT_PRIME
    verify_symbolic: bool = False
    linear_change_height: int = Field(default=10, ge=1)

    # Enumeration
    enumeration_cap: int = Field(default=24, ge=1)
    workers: Optional[int] = Field(default=None, ge=1)

    # Output
    output_format: str = "text"

    @property
    def effective_workers(self) -> int:
        """Worker count, defaulting to available parallelism."""
        return self.workers or os.cpu_count() or 1


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
