# app/routes/common.py
import logging
from typing import Callable

from fastapi import HTTPException

from app.models.request_models import OutputRecord
from app.services.errors import SkewCharError

logger = logging.getLogger(__name__)


def run_command(command: Callable[..., OutputRecord], *args, **kwargs) -> OutputRecord:
    """Runs a command, turning domain errors into 400 responses."""
    try:
        return command(*args, **kwargs)
    except SkewCharError as e:
        logger.warning(f"Rejected {command.__name__} request: {type(e).__name__}: {e}")
        raise HTTPException(status_code=400, detail=f"{type(e).__name__}: {e}") from e
