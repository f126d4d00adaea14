# app/main.py
from contextlib import asynccontextmanager

from fastapi import FastAPI

from app import __version__
from app.config import configure_logging
from app.routes import router as api_router


@asynccontextmanager
async def lifespan(app: FastAPI):
    # installed on server start only
    configure_logging()
    yield


app = FastAPI(
    title="Skew Character API",
    description="Littlewood-Richardson coefficients, skew character decompositions and multiplicity-free equalities",
    version=__version__,
    lifespan=lifespan,
)

app.include_router(api_router)


@app.get("/", summary="API Root / Health Check")
def root():
    return {"message": "Skew Character API is running! Access docs at /docs", "version": __version__}
