# app/config.py
import logging
import os
from functools import lru_cache
from typing import Optional

import coloredlogs
from dotenv import load_dotenv
from pydantic import BaseModel, Field

from app.models.verdict_models import VerificationBounds

load_dotenv()

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


class Settings(BaseModel):
    log_level: str = Field("INFO", description="Root log level.")
    jobs: int = Field(1, ge=1, description="Worker processes for the verification harness.")
    max_cells: int = Field(8, ge=1)
    max_part: int = Field(8, ge=1)
    max_rows: int = Field(8, ge=1)
    progress: bool = Field(False, description="Show a progress bar during long runs.")

    @property
    def bounds(self) -> VerificationBounds:
        return VerificationBounds(max_cells=self.max_cells, max_part=self.max_part, max_rows=self.max_rows)


def _env_flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in {"1", "true", "yes", "on"}


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings(
        log_level=os.getenv("SKEWCHAR_LOG_LEVEL", "INFO"),
        jobs=int(os.getenv("SKEWCHAR_JOBS", "1")),
        max_cells=int(os.getenv("SKEWCHAR_MAX_CELLS", "8")),
        max_part=int(os.getenv("SKEWCHAR_MAX_PART", "8")),
        max_rows=int(os.getenv("SKEWCHAR_MAX_ROWS", "8")),
        progress=_env_flag("SKEWCHAR_PROGRESS"),
    )


def configure_logging(level: Optional[str] = None) -> None:
    """Colored logs on stderr; stdout stays reserved for command output."""
    coloredlogs.install(level=(level or get_settings().log_level).upper(), fmt=LOG_FORMAT, stream=None)
    logging.getLogger(__name__).debug("Logging configured")
