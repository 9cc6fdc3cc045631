"""
Runtime settings.

Values come from the environment (optionally a .env file picked up by python-dotenv);
the CLI overrides them with explicit flags. Nothing here is required.
"""
import os
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, Field

OutputFormat = Literal["text", "json", "csv"]
LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


class Settings(BaseModel):
    """Knobs shared by the CLI and the sweep runners"""

    jobs: int = Field(default=1, ge=1)
    log_level: LogLevel = "WARNING"
    output_format: OutputFormat = "text"
    # class_number_real: distance to the nearest integer allowed before rounding
    class_number_window: float = Field(default=0.01, gt=0, lt=0.5)
    class_number_retries: int = Field(default=1, ge=0)

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from CYCLONORM_* environment variables"""
        load_dotenv()
        return cls(
            jobs=int(os.getenv("CYCLONORM_JOBS", "1")),
            log_level=os.getenv("CYCLONORM_LOG_LEVEL", "WARNING").upper(),
            output_format=os.getenv("CYCLONORM_FORMAT", "text").lower(),
        )


DEFAULT_SETTINGS = Settings()
