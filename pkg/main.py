import logging
from contextlib import asynccontextmanager
from datetime import datetime, timezone

import uvicorn
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from src import verification
from src.config import settings
from src.routers import braids, checks, groups

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    # On startup
    logging.basicConfig(level=settings.LOG_LEVEL.upper(), format=settings.LOG_FORMAT)
    logger.info(
        "Starting up: %d checks registered, max_cosets=%d, search workers=%d",
        len(verification.check_ids()),
        settings.MAX_COSETS,
        settings.SEARCH_WORKERS,
    )
    yield
    # On shutdown
    logger.info("Shutting down...")


app = FastAPI(
    title="Braid Certificate API",
    description="""
    Exact group-theoretic computations behind the braid certificate.

    ## Features
    * **Check battery**: Every computation behind the certificate as a named, reproducible check.
    * **Braid action**: Artin action of a braid on loops and based paths, with the disk reflection.
    * **Certificates**: Search for permutation representations certifying a 4-strand braid.
    * **Coset enumeration**: Todd-Coxeter on finite presentations, element orders and quotients.
    * **Homomorphism search**: Every homomorphism from a presented group into a small symmetric group.
    """,
    version=settings.VERSION,
    lifespan=lifespan,
    docs_url="/docs",
    redoc_url="/redoc",
    openapi_url="/openapi.json",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.ALLOWED_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(checks.router)
app.include_router(braids.router)
app.include_router(groups.router)

# --- Default and System Endpoints ---

@app.get("/", summary="Root Endpoint", tags=["System"])
async def read_root():
    """Points clients at the interactive docs."""
    return {"message": "Welcome to the Braid Certificate API. See /docs for details."}

@app.get("/health", summary="Health Check", tags=["System"])
async def health_check():
    """Liveness check; also reports how many checks are registered."""
    health_status = {
        "status": "healthy",
        "checks": len(verification.check_ids()),
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "version": app.version,
    }
    return JSONResponse(status_code=200, content=health_status)

# python main.py
if __name__ == "__main__":
    uvicorn.run("main:app", host="0.0.0.0", port=8000, reload=True)
