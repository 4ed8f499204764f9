"""Pydantic models for job configs and emitted records"""

import os
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from hecke.constants import DEFAULT_SEED, CohomPath, GroupKind, ReductionMode, SignPolicy


class GroupRecord(BaseModel):
    kind: GroupKind = GroupKind.FULL
    level: int = Field(1, ge=1)
    sign: SignPolicy = SignPolicy.SL
    n: int = 2
    generators: Optional[List[List[int]]] = None  # custom H generators mod N, row-major


class ReductionConfig(BaseModel):
    mode: ReductionMode = ReductionMode.CHARL
    ell: Optional[int] = None  # required for charl
    nu: int = 1
    target_level: Optional[int] = None  # N, the target is then N * ell^nu for charl
    modulus: Optional[int] = None  # overrides the character modulus


class JobConfig(BaseModel):
    command: str
    group: GroupRecord = GroupRecord()
    module: str = "trivial:Q"  # e.g. sym:10:0:F5, trivial:F5, char:5:1:2:F5
    degree: int = Field(1, ge=0, le=1)
    path: CohomPath = CohomPath.AMBIENT
    labels: List[str] = Field(
        default_factory=lambda: [p for p in os.environ.get("HECKE_ENGINE_LABELS", "2,3,7").split(",") if p.strip()]
    )
    p: Optional[int] = None
    m: int = 1
    delta: Optional[List[int]] = None  # row-major matrix for decompose
    n: int = 2
    primes: List[int] = Field(default_factory=lambda: [2, 3, 5, 7])
    reduction: ReductionConfig = ReductionConfig()
    output: Optional[str] = None
    seed: int = DEFAULT_SEED
    jobs: int = Field(1, ge=1)


class CosetRecord(BaseModel):
    record: str = "coset"
    index: int
    coeff: str
    matrix: List[List[str]]
    group: str


class HeckeMatrixRecord(BaseModel):
    record: str = "hecke_matrix"
    label: Dict[str, Any]
    matrix: List[List[str]]
    field: str
    degree: int
    group_hash: str
    module_hash: str
    char_poly: str
    space: Dict[str, Any]


class EigenReportRecord(BaseModel):
    record: str = "eigen_report"
    space: Dict[str, Any]
    labels: List[str]
    field: str
    dim: int
    systems: List[Dict[str, Any]]


class WitnessCertificate(BaseModel):
    record: str = "witness"
    source: Dict[str, Any]
    eigensystem: Dict[str, str]
    labels: List[str]
    target: Dict[str, Any]
    witness: Dict[str, Any]
    candidates_searched: int
    verification: List[Dict[str, Any]]
    verified: bool


class CheckRecord(BaseModel):
    record: str = "check"
    name: str
    passed: bool
    detail: str
    seconds: Optional[str] = None


class ErrorRecord(BaseModel):
    record: str = "error"
    code: str
    message: str
