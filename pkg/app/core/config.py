import logging
import os
from typing import Any

from pydantic import field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # CORE SETTINGS
    ENV: str = os.getenv("ENV", "development")
    DEBUG: bool = ENV == "development"
    PROJECT_NAME: str = "qdha"

    # GROUP SETTINGS
    CLOSURE_CAP: int = int(os.getenv("CLOSURE_CAP", "100000"))
    PRODUCT_TABLE_LIMIT: int = int(os.getenv("PRODUCT_TABLE_LIMIT", "4096"))

    # DEFORMATION SETTINGS
    DEGREE_CAP: int = int(os.getenv("DEGREE_CAP", "3"))
    GRADED_DIMENSION_CAP: int = int(os.getenv("GRADED_DIMENSION_CAP", "3"))

    # SOLVER SETTINGS
    THREADS: int = int(os.getenv("THREADS", "0"))
    CACHE_MAX_SIZE: int = int(os.getenv("CACHE_MAX_SIZE", "4096"))

    @field_validator(
        "CLOSURE_CAP", "PRODUCT_TABLE_LIMIT", "DEGREE_CAP",
        "GRADED_DIMENSION_CAP", "THREADS", "CACHE_MAX_SIZE",
    )
    def non_negative(cls, v: int) -> int:
        if v < 0:
            raise ValueError(f"expected a non-negative integer, got {v}")
        return v

    # LOGGING SETTINGS
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")

    @field_validator("LOG_LEVEL")
    def known_log_level(cls, v: Any) -> str:
        level = str(v).upper()
        if not isinstance(getattr(logging, level, None), int):
            raise ValueError(f"unknown log level {v}")
        return level

    def worker_threads(self) -> int:
        """Effective solver thread count (0 means every available core)."""
        return self.THREADS or (os.cpu_count() or 1)

    class Config:
        env_file = ".env"
        case_sensitive = True


settings = Settings()
