# app/routes/schubert_routes.py
from fastapi import APIRouter

from app.models.request_models import DualityRequest, OutputRecord, StarRequest
from app.routes.common import run_command
from app.services import command_service

schubert_router = APIRouter()


@schubert_router.post("/star", response_model=OutputRecord, summary="Product restricted to a box")
def star(request: StarRequest):
    return run_command(command_service.star, request.mu, request.nu, request.box)


@schubert_router.post("/duality", response_model=OutputRecord, summary="Skew character / box product duality")
def duality(request: DualityRequest):
    """Compares every coefficient of [lam/mu] with the box product of mu and the complement of lam."""
    return run_command(command_service.duality, request.mu, request.lam, request.box)
