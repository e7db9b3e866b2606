"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

PartitionList = list[int]


class DegreeSetModel(BaseModel):
    """Exact set of cover degrees: everything, or a finite sorted list."""

    kind: Literal["all", "finite"]
    members: Optional[list[int]] = None


class OrbitEntry(BaseModel):
    partition: PartitionList
    special: bool
    qa: DegreeSetModel


class OrbitListResponse(BaseModel):
    family: str
    rank: int
    orbit_weight: int
    count: int
    orbits: list[OrbitEntry]


class DualityRequest(BaseModel):
    family: str
    rank: int = Field(ge=1)
    degree: int = Field(ge=1)
    partition: Optional[PartitionList] = None


class DualityPair(BaseModel):
    source: PartitionList
    image: PartitionList


class DualityResponse(BaseModel):
    family: str
    rank: int
    degree: int
    dual_family: str
    dual_rank: int
    pairs: list[DualityPair]


class VerifyRequest(BaseModel):
    family: str
    rank_max: int = Field(ge=1)
    degree_max: int = Field(ge=1)
    jobs: int = Field(default=1, ge=1)
    seed: int = 0


class CellReport(BaseModel):
    rank: int
    degree: int
    orbits_checked: int
    violations: list[dict]


class VerifyResponse(BaseModel):
    config: dict
    cells: int
    orbits_checked: int
    violations: int
    clean: bool
    reports: list[CellReport]


class NeverSetResponse(BaseModel):
    family: str
    rank: int
    degree_cap: int
    n0_qa: list[PartitionList]
    n0_bv: list[PartitionList]
    equal: bool
    difference: list[PartitionList]


class ScanRequest(BaseModel):
    family: str
    rank_max: int = Field(ge=1)
    degree_cap: Optional[int] = Field(default=None, ge=1)


class ScanRowModel(BaseModel):
    rank: int
    n0_qa: list[PartitionList]
    n0_bv: list[PartitionList]
    equal: bool
    difference: list[PartitionList]


class ScanResponse(BaseModel):
    family: str
    rank_max: int
    rows: list[ScanRowModel]
    first_divergence_rank: Optional[int]


class RaisabilityModel(BaseModel):
    kind: Literal["na", "all", "excluding"]
    members: Optional[list[int]] = None


class ExceptionalRecordModel(BaseModel):
    label: str
    special: bool
    even: bool
    stabilizer: str
    pairs: list[list[int]]
    criterion: Literal["standard", "so_lemma", "direct"]
    qa: DegreeSetModel
    raisable: RaisabilityModel
    tau_same_pair: bool
    diagram: Optional[list[int]]
    graded_dims: Optional[dict[str, int]]


class ExceptionalDumpResponse(BaseModel):
    group: str
    count: int
    records: list[ExceptionalRecordModel]


class RowIssueModel(BaseModel):
    label: str
    field: str
    detail: str


class ExceptionalCheckResponse(BaseModel):
    group: str
    rows: int
    expected_rows: int
    mismatches: int
    clean: bool
    issues: list[RowIssueModel]


class ExceptionalN0Response(BaseModel):
    group: str
    labels: list[str]


class GradedDimsRequest(BaseModel):
    group: str
    labels: list[int]


class GradedDimsResponse(BaseModel):
    group: str
    labels: list[int]
    dims: dict[str, int]
    total_dim: int
    center_dim: int
    levi_nodes: list[int]
    levi_type: str


class ErrorBody(BaseModel):
    code: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody
