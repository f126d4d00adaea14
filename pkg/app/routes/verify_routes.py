# app/routes/verify_routes.py
import logging

from fastapi import APIRouter

from app.config import get_settings
from app.models.request_models import OutputRecord, VerifyRequest
from app.routes.common import run_command
from app.services import command_service

logger = logging.getLogger(__name__)

verify_router = APIRouter()


@verify_router.post("/verify", response_model=OutputRecord, summary="Exhaustive equality check")
def verify(request: VerifyRequest):
    """
    Runs the multiplicity-free equality check over every basic skew diagram within bounds.
    Unset bounds come from the SKEWCHAR_MAX_* settings. Large bounds take minutes.
    """
    settings = get_settings()
    bounds = command_service.bounds_from(request.max_cells, request.max_part, request.max_rows, settings.bounds)
    logger.info(f"Verification requested over HTTP with bounds {bounds.model_dump()}")
    return run_command(command_service.verify, bounds, jobs=settings.jobs)
