# app/routes/character_routes.py
from fastapi import APIRouter

from app.models.request_models import (
    ClassifyRequest,
    CoefficientRequest,
    DecomposeRequest,
    EqualRequest,
    OutputRecord,
)
from app.routes.common import run_command
from app.services import command_service

character_router = APIRouter()


@character_router.post("/decompose", response_model=OutputRecord, summary="Decompose a skew character")
def decompose(request: DecomposeRequest):
    """Returns [outer/inner] as irreducible characters with their LR coefficients."""
    return run_command(command_service.decompose, request.skew)


@character_router.post("/coefficient", response_model=OutputRecord, summary="Single LR coefficient")
def coefficient(request: CoefficientRequest):
    return run_command(command_service.coefficient, request.lam, request.mu, request.nu)


@character_router.post("/classify", response_model=OutputRecord, summary="Multiplicity-free classification")
def classify(request: ClassifyRequest):
    return run_command(command_service.classify, request.skew)


@character_router.post("/equal", response_model=OutputRecord, summary="Compare two skew characters")
def equal(request: EqualRequest):
    """Trivial equality, staircase conjugacy, brute-force equality and the necessary conditions."""
    return run_command(command_service.equal, request.first, request.second)
