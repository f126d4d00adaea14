from fastapi import APIRouter

from .character_routes import character_router
from .schubert_routes import schubert_router
from .verify_routes import verify_router

router = APIRouter()

router.include_router(character_router, prefix="", tags=["Characters"])
router.include_router(schubert_router, prefix="/schubert", tags=["Schubert"])
router.include_router(verify_router, prefix="", tags=["Verification"])
