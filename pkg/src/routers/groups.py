from fastapi import APIRouter, HTTPException, Path, Query, status
from fastapi.concurrency import run_in_threadpool

from src import algebra
from src.algebra import AlgebraError, CosetLimitExceeded
from src.config import MAX_KLEIN_K, settings
from src.models import (
    EnumerateRequest,
    EnumResultRead,
    HomSearchRequest,
    HomSearchResponse,
    KleinResponse,
    OrderRequest,
    OrderResponse,
)
from src.utils import format_candidate, format_enum_result, format_klein

router = APIRouter(prefix="/groups", tags=["Groups"])


@router.post("/enumerate", response_model=EnumResultRead)
async def enumerate_cosets(request: EnumerateRequest):
    """
    Coset enumeration of the subgroup generated by `subgroup` (trivial when empty).
    """
    try:
        presentation = algebra.parse_presentation(request.presentation)
        subgroup = [algebra.parse_word(w, presentation.alphabet) for w in request.subgroup]
        result = await run_in_threadpool(
            algebra.todd_coxeter, presentation, subgroup, request.max_cosets
        )
    except AlgebraError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return format_enum_result(result)


@router.post("/order", response_model=OrderResponse)
async def element_order(request: OrderRequest):
    try:
        presentation = algebra.parse_presentation(request.presentation)
        word = algebra.parse_word(request.word, presentation.alphabet)
        order = await run_in_threadpool(
            algebra.element_order, presentation, word, request.max_cosets
        )
    except CosetLimitExceeded as exc:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(exc))
    except AlgebraError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return OrderResponse(word=str(word), order=order)


@router.post("/hom-search", response_model=HomSearchResponse)
async def hom_search(request: HomSearchRequest):
    """
    Every homomorphism into S_degree satisfying the constraints, in lexicographic order.
    """
    try:
        presentation = algebra.parse_presentation(request.presentation)
        nontrivial = (
            algebra.parse_word(request.require_nontrivial, presentation.alphabet)
            if request.require_nontrivial
            else None
        )
        spec = algebra.SearchSpec(
            presentation,
            request.degree,
            restrict_to_involutions=request.involutions,
            require_nontrivial=nontrivial,
        )
        candidates = await run_in_threadpool(algebra.search, spec, settings.SEARCH_WORKERS)
    except AlgebraError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
    return HomSearchResponse(
        degree=request.degree,
        count=len(candidates),
        candidates=[format_candidate(c) for c in candidates],
    )


@router.get("/klein/{k}", response_model=KleinResponse)
async def klein(
    k: int = Path(..., ge=-MAX_KLEIN_K, le=MAX_KLEIN_K),
    max_cosets: int = Query(settings.MAX_COSETS, ge=1),
):
    """
    Orders and exponents of G_k modulo w2 and modulo v2 w2.
    """
    quotients = await run_in_threadpool(algebra.klein_quotients, k, max_cosets)
    return format_klein(k, quotients)
