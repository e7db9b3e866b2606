"""FastAPI service exposing the orbit toolkit.

All handlers are thin: they validate transport-level inputs, call the core
package, and shape the results into the response models.  Mathematical errors
surface as HTTP 400 with a structured body; data-file problems as HTTP 500.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import __version__
from ..admissibility import (
    conjecture_scan,
    is_special,
    n0_bv_set,
    n0_qa_set,
    qa_degree_set,
    verify_theorem,
)
from ..degrees import DegreeSet
from ..duality import d_bv, dual_group, image_degree_cap
from ..errors import (
    BadSequence,
    DataError,
    DomainError,
    InvalidDiagram,
    InvalidPartition,
)
from ..partitions import ClassicalType, enumerate_orbits, make_partition
from ..roots import (
    CartanSpec,
    WeightedDiagram,
    algebra_dim,
    center_dim,
    graded_dims,
    levi_nodes,
    levi_type,
)
from ..tables import (
    GROUPS,
    check_table_consistency,
    get_records,
    n0_qa_exceptional,
)
from . import schemas

app = FastAPI(
    title="covorbits",
    version=__version__,
    description=(
        "Nilpotent orbits of classical and exceptional groups: enumeration, "
        "covering duality, quasi-admissibility, and table verification."
    ),
)


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error": {"code": code, "message": message}}
    )


@app.exception_handler(DomainError)
@app.exception_handler(InvalidPartition)
@app.exception_handler(BadSequence)
@app.exception_handler(InvalidDiagram)
async def _domain_error_handler(request: Request, exc: Exception) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": {"code": "domain_error", "message": str(exc)}},
    )


@app.exception_handler(DataError)
async def _data_error_handler(request: Request, exc: DataError) -> JSONResponse:
    return JSONResponse(
        status_code=500,
        content={"error": {"code": "data_error", "message": str(exc)}},
    )


@app.exception_handler(RequestValidationError)
async def _validation_handler(request: Request, exc: RequestValidationError) -> JSONResponse:
    return _error(422, "validation_error", str(exc))


def _classical(family: str, rank: int) -> ClassicalType:
    return ClassicalType(family.upper(), rank)


def _degree_set_model(ds: DegreeSet) -> schemas.DegreeSetModel:
    if ds.is_all:
        return schemas.DegreeSetModel(kind="all")
    return schemas.DegreeSetModel(kind="finite", members=list(ds.members))


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/orbits/{family}/{rank}", response_model=schemas.OrbitListResponse)
def orbits(family: str, rank: int, qa_bound: int | None = Query(default=None, ge=1)):
    t = _classical(family, rank)
    entries = []
    for p in enumerate_orbits(t):
        entries.append(
            schemas.OrbitEntry(
                partition=list(p),
                special=is_special(t, p),
                qa=_degree_set_model(qa_degree_set(t, p, qa_bound)),
            )
        )
    return schemas.OrbitListResponse(
        family=t.family,
        rank=t.rank,
        orbit_weight=t.orbit_weight,
        count=len(entries),
        orbits=entries,
    )


@app.post("/bv", response_model=schemas.DualityResponse)
def bv(req: schemas.DualityRequest):
    t = _classical(req.family, req.rank)
    dual = dual_group(t, req.degree)
    if req.partition is not None:
        sources = [make_partition(req.partition)]
    else:
        sources = list(enumerate_orbits(dual))
    pairs = [
        schemas.DualityPair(source=list(p), image=list(d_bv(t, req.degree, p)))
        for p in sources
    ]
    return schemas.DualityResponse(
        family=t.family,
        rank=t.rank,
        degree=req.degree,
        dual_family=dual.family,
        dual_rank=dual.rank,
        pairs=pairs,
    )


def _verify_cell(args: tuple[str, int, int]) -> schemas.CellReport:
    family, rank, degree = args
    rep = verify_theorem(ClassicalType(family, rank), degree)
    return schemas.CellReport(
        rank=rank,
        degree=degree,
        orbits_checked=rep.total_orbits_checked,
        violations=[
            {
                "dual_partition": list(v.dual_partition),
                "image_partition": list(v.image_partition),
                "description": v.description,
            }
            for v in rep.violations
        ],
    )


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(req: schemas.VerifyRequest):
    t_family = req.family.upper()
    ClassicalType(t_family, 1)  # validates the family early
    cells = [
        (t_family, rank, degree)
        for rank in range(1, req.rank_max + 1)
        for degree in range(1, req.degree_max + 1)
    ]
    if req.jobs > 1:
        with ThreadPoolExecutor(max_workers=req.jobs) as pool:
            reports = list(pool.map(_verify_cell, cells))
    else:
        reports = [_verify_cell(c) for c in cells]
    reports.sort(key=lambda r: (r.rank, r.degree))
    total_violations = sum(len(r.violations) for r in reports)
    # worker count deliberately omitted: output must not depend on parallelism
    return schemas.VerifyResponse(
        config={
            "family": t_family,
            "rank_max": req.rank_max,
            "degree_max": req.degree_max,
            "seed": req.seed,
        },
        cells=len(reports),
        orbits_checked=sum(r.orbits_checked for r in reports),
        violations=total_violations,
        clean=total_violations == 0,
        reports=reports,
    )


@app.get("/n0/{family}/{rank}", response_model=schemas.NeverSetResponse)
def never_sets(family: str, rank: int, degree_cap: int | None = Query(default=None, ge=1)):
    t = _classical(family, rank)
    if t.family == "A":
        raise DomainError("never-sets are defined for families B, C, D")
    qa = n0_qa_set(t)
    bv_ = n0_bv_set(t, degree_cap)
    return schemas.NeverSetResponse(
        family=t.family,
        rank=t.rank,
        degree_cap=degree_cap if degree_cap is not None else image_degree_cap(t),
        n0_qa=[list(p) for p in qa],
        n0_bv=[list(p) for p in bv_],
        equal=qa == bv_,
        difference=[list(p) for p in sorted(set(bv_) - set(qa), reverse=True)],
    )


@app.post("/scan", response_model=schemas.ScanResponse)
def scan(req: schemas.ScanRequest):
    report = conjecture_scan(req.family.upper(), req.rank_max, req.degree_cap)
    rows = [
        schemas.ScanRowModel(
            rank=row.rank,
            n0_qa=[list(p) for p in row.n0_qa],
            n0_bv=[list(p) for p in row.n0_bv],
            equal=row.equal,
            difference=[list(p) for p in row.difference],
        )
        for row in report.rows
    ]
    return schemas.ScanResponse(
        family=report.family,
        rank_max=report.rank_max,
        rows=rows,
        first_divergence_rank=report.first_divergence_rank,
    )


def _group(name: str) -> str:
    group = name.upper()
    if group not in GROUPS:
        raise DomainError(f"unknown exceptional group {name!r}; expected one of {GROUPS}")
    return group


@app.get("/exceptional/{group}/dump", response_model=schemas.ExceptionalDumpResponse)
def exceptional_dump(group: str):
    g = _group(group)
    records = [schemas.ExceptionalRecordModel(**r.to_json()) for r in get_records(g)]
    return schemas.ExceptionalDumpResponse(group=g, count=len(records), records=records)


@app.get("/exceptional/{group}/check", response_model=schemas.ExceptionalCheckResponse)
def exceptional_check(group: str):
    g = _group(group)
    rep = check_table_consistency(g)
    return schemas.ExceptionalCheckResponse(
        group=g,
        rows=rep.rows,
        expected_rows=rep.expected_rows,
        mismatches=len(rep.issues),
        clean=rep.clean,
        issues=[
            schemas.RowIssueModel(label=i.label, field=i.field, detail=i.detail)
            for i in rep.issues
        ],
    )


@app.get("/exceptional/{group}/n0", response_model=schemas.ExceptionalN0Response)
def exceptional_n0(group: str):
    g = _group(group)
    return schemas.ExceptionalN0Response(group=g, labels=list(n0_qa_exceptional(g)))


@app.post("/gdim", response_model=schemas.GradedDimsResponse)
def gdim(req: schemas.GradedDimsRequest):
    spec = CartanSpec.parse(req.group)
    wd = WeightedDiagram(spec, tuple(req.labels))
    dims = graded_dims(wd)
    return schemas.GradedDimsResponse(
        group=str(spec),
        labels=list(wd.labels),
        dims={str(k): v for k, v in dims.items()},
        total_dim=algebra_dim(spec),
        center_dim=center_dim(wd),
        levi_nodes=list(levi_nodes(wd)),
        levi_type=levi_type(wd),
    )
