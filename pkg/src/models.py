from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.config import (
    DEFAULT_DEGREE_MAX,
    DEFAULT_MAX_COSETS,
    DEFAULT_STRAND_COUNT,
    MAX_KLEIN_K,
    MAX_SEARCH_DEGREE,
    MAX_STRAND_COUNT,
    settings,
)

# --- Enums for choices ---

class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"

class CertifyStatus(str, Enum):
    VALID = "valid"
    UNKNOWN = "unknown"

# --- Report Models ---

class Check(BaseModel):
    id: str
    description: str
    paper_ref: str
    status: CheckStatus
    expected: Any = None
    actual: Any = None

    @model_validator(mode="after")
    def status_matches_values(self) -> "Check":
        if self.status is CheckStatus.PASS and self.expected != self.actual:
            raise ValueError(f"check {self.id} is marked pass but expected != actual")
        if self.status is CheckStatus.FAIL and self.expected == self.actual:
            raise ValueError(f"check {self.id} is marked fail but expected == actual")
        return self

class Summary(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    passed: int = Field(0, alias="pass")
    failed: int = Field(0, alias="fail")
    inconclusive: int = 0

    @classmethod
    def from_checks(cls, checks: List[Check]) -> "Summary":
        statuses = [c.status for c in checks]
        return cls(
            passed=statuses.count(CheckStatus.PASS),
            failed=statuses.count(CheckStatus.FAIL),
            inconclusive=statuses.count(CheckStatus.INCONCLUSIVE),
        )

class Report(BaseModel):
    version: str
    generated_at: Optional[datetime] = None
    checks: List[Check]
    summary: Summary

    @model_validator(mode="after")
    def summary_matches_checks(self) -> "Report":
        if self.summary != Summary.from_checks(self.checks):
            raise ValueError("summary counts do not match the checks")
        return self

    @property
    def exit_code(self) -> int:
        if self.summary.failed:
            return 1
        if self.summary.inconclusive:
            return 2
        return 0

    def canonical_json(self) -> str:
        """JSON without the timestamp, so identical runs give identical bytes."""
        return self.model_dump_json(by_alias=True, exclude={"generated_at"}, indent=2)

# --- Braid Models ---

class BraidActRequest(BaseModel):
    braid: str
    target: str = Field(..., description="gamma<i>, rho<j> or a word over g1..g4")
    reflect: bool = False
    involutory: bool = False
    strand_count: int = Field(DEFAULT_STRAND_COUNT, ge=2, le=MAX_STRAND_COUNT)

class BraidActResponse(BaseModel):
    braid: str
    target: str
    result: str

class CertifyRequest(BaseModel):
    braid: str
    degree_max: int = Field(settings.DEGREE_MAX, ge=2, le=MAX_SEARCH_DEGREE)

class CertificateRead(BaseModel):
    braid: str
    degree: int
    images: Dict[str, str]
    transitive: bool
    relators_killed: bool
    klein_four_fa: bool
    u_nontrivial_involution: bool
    valid: bool
    f_word: Optional[str] = None
    u_word: str
    a_word: str
    f_image: Optional[str] = None
    a_image: str
    u_image: str

class CertifyResponse(BaseModel):
    braid: str
    status: CertifyStatus
    certificate: Optional[CertificateRead] = None

# --- Group Models ---

class EnumerateRequest(BaseModel):
    presentation: str = Field(..., description="Presentation file contents: a gens: line and rel: lines")
    subgroup: List[str] = []
    max_cosets: int = Field(settings.MAX_COSETS, ge=1)

class EnumResultRead(BaseModel):
    status: str
    coset_count: int
    defined: int
    actions: Dict[str, str] = {}

class OrderRequest(BaseModel):
    presentation: str
    word: str
    max_cosets: int = Field(settings.MAX_COSETS, ge=1)

class OrderResponse(BaseModel):
    word: str
    order: int

class HomSearchRequest(BaseModel):
    presentation: str
    degree: int = Field(..., ge=1, le=MAX_SEARCH_DEGREE)
    involutions: bool = False
    require_nontrivial: Optional[str] = None

class HomSearchResponse(BaseModel):
    degree: int
    count: int
    candidates: List[Dict[str, str]]

class KleinQuotientRead(BaseModel):
    kernel: str
    status: str
    order: int
    exponent: Optional[int] = None

class KleinResponse(BaseModel):
    k: int
    quotients: List[KleinQuotientRead]

# --- CLI Configuration ---

class CliConfig(BaseModel):
    """Validated command-line flags; built from argv only."""

    model_config = ConfigDict(extra="forbid")

    command: str
    json_output: bool = False
    verbose: bool = False
    max_cosets: int = Field(DEFAULT_MAX_COSETS, ge=1)
    degree_max: int = Field(DEFAULT_DEGREE_MAX, ge=2, le=MAX_SEARCH_DEGREE)
    degree: Optional[int] = Field(None, ge=1, le=MAX_SEARCH_DEGREE)
    check_id: Optional[str] = None
    braid: Optional[str] = None
    target: Optional[str] = None
    reflect: bool = False
    involutory: bool = False
    presentation: Optional[Path] = None
    subgroup: Optional[str] = None
    word: Optional[str] = None
    involutions: bool = False
    require_nontrivial: Optional[str] = None
    k: Optional[int] = Field(None, ge=-MAX_KLEIN_K, le=MAX_KLEIN_K)
    workers: int = Field(1, ge=1)
    images: List[str] = []
