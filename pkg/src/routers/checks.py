from fastapi import APIRouter, HTTPException, Query, status
from fastapi.concurrency import run_in_threadpool

from src import verification
from src.algebra import UnknownCheckError
from src.config import settings
from src.models import Check, Report
from src.utils import run_report

router = APIRouter(prefix="/checks", tags=["Checks"])


@router.get("", response_model=Report)
async def read_report(max_cosets: int = Query(settings.MAX_COSETS, ge=1)):
    """
    Runs the full check battery and returns the report.
    """
    return await run_report(max_cosets, workers=settings.SEARCH_WORKERS)


@router.get("/{check_id}", response_model=Check)
async def read_check(check_id: str, max_cosets: int = Query(settings.MAX_COSETS, ge=1)):
    """
    Runs a single check in isolation.
    """
    try:
        return await run_in_threadpool(verification.run_check, check_id, max_cosets)
    except UnknownCheckError as exc:
        raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=str(exc))
