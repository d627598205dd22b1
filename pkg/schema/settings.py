"""Runtime defaults read from the environment (and a ``.env`` file)."""

import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class MonitorSettings(BaseModel):
    log_level: str = Field("WARNING", description="loguru level of the stderr sink")
    chunk_rows: int = Field(64, ge=1, description="Default dense chunk size in rows")
    queue_size: int = Field(1024, ge=0, description="Reader queue capacity; 0 reads inline")
    check_trials: int = Field(200, ge=0, description="Default number of random checks")
    report_dir: str = Field("reports", description="Where mismatch artifacts are written")

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in _LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return value

    @classmethod
    def from_env(cls) -> "MonitorSettings":
        load_dotenv()
        return cls(
            log_level=os.getenv("MTLMON_LOG_LEVEL", "WARNING"),
            chunk_rows=int(os.getenv("MTLMON_CHUNK_ROWS", "64")),
            queue_size=int(os.getenv("MTLMON_QUEUE_SIZE", "1024")),
            check_trials=int(os.getenv("MTLMON_CHECK_TRIALS", "200")),
            report_dir=os.getenv("MTLMON_REPORT_DIR", "reports"),
        )
