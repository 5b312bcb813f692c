from fastapi import APIRouter, HTTPException, status
from fastapi.concurrency import run_in_threadpool

from src import algebra
from src.algebra import AlgebraError
from src.config import settings
from src.models import BraidActRequest, BraidActResponse, CertifyRequest, CertifyResponse
from src.utils import apply_braid, format_certify_response

router = APIRouter(prefix="/braids", tags=["Braids"])


@router.post("/act", response_model=BraidActResponse)
async def act(request: BraidActRequest):
    """
    Applies a braid to a loop generator, a based path or a loop word.
    """
    try:
        result = await run_in_threadpool(
            apply_braid,
            request.braid,
            request.target,
            request.reflect,
            request.involutory,
            request.strand_count,
        )
    except AlgebraError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return BraidActResponse(braid=request.braid, target=request.target, result=result)


@router.post("/certify", response_model=CertifyResponse)
async def certify(request: CertifyRequest):
    """
    Searches increasing degrees for a valid certificate; "unknown" when none is found.
    """
    try:
        braid = algebra.parse_braid(request.braid)
        certificate = await run_in_threadpool(
            algebra.certify_braid, braid, request.degree_max, settings.SEARCH_WORKERS
        )
    except AlgebraError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return format_certify_response(request.braid, certificate)
