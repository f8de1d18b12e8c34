"""HTTP service exposing the toolkit as stateless compute endpoints.

Each endpoint accepts an algebra document (plus options), runs the
corresponding core computation and returns the JSON report.  Input and
domain errors surface as HTTP 400 with a machine-readable ``code``;
internal verification defects surface as HTTP 500 with their code.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import reports
from ..errors import (
    AlgebraError,
    LeibnizIdentityViolation,
    MaximalityInconclusive,
    TheoremViolation,
    VerificationFailed,
)
from ..serialize import subspace_from_rows
from . import schemas

app = FastAPI(
    title="leibnizalg",
    description="Exact structure theory for finite-dimensional Leibniz algebras",
    version="0.1.0",
)

_DEFECT_ERRORS = (VerificationFailed, TheoremViolation, MaximalityInconclusive)


def _error_detail(exc: AlgebraError) -> dict:
    detail = {"code": exc.code, "message": str(exc)}
    if isinstance(exc, LeibnizIdentityViolation):
        detail["triple"] = [exc.i, exc.j, exc.k]
        detail["lhs"] = list(exc.lhs)
        detail["rhs"] = list(exc.rhs)
    return detail


def _run(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _DEFECT_ERRORS as exc:
        raise HTTPException(status_code=500, detail=_error_detail(exc))
    except AlgebraError as exc:
        raise HTTPException(status_code=400, detail=_error_detail(exc))


def _algebra(doc: schemas.AlgebraDoc):
    from ..serialize import algebra_from_dict

    return _run(algebra_from_dict, doc.model_dump())


def _subspace(a, rows):
    return _run(subspace_from_rows, rows, a.field, a.dim)


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> dict:
    return {"status": "ok"}


@app.post(
    "/validate",
    response_model=schemas.ValidateResponse,
    response_model_exclude_none=True,
)
def validate(req: schemas.AlgebraRequest) -> dict:
    a = _algebra(req.algebra)
    return _run(reports.validate_report, a)


@app.post("/analyze", response_model=schemas.AnalyzeResponse)
def analyze(req: schemas.AnalyzeRequest) -> dict:
    a = _algebra(req.algebra)
    return _run(reports.analyze_report, a, seed=req.seed, max_attempts=req.max_attempts)


@app.post("/series", response_model=schemas.SeriesResponse)
def series(req: schemas.SeriesRequest) -> dict:
    a = _algebra(req.algebra)
    sub = _subspace(a, req.subspace) if req.subspace is not None else None
    return _run(reports.series_report, a, sub)


@app.post("/subinvariant", response_model=schemas.SubinvariantResponse)
def subinvariant(req: schemas.SubinvariantRequest) -> dict:
    a = _algebra(req.algebra)
    sub = _subspace(a, req.subspace)
    return _run(reports.subinvariant_report, a, sub)


@app.post("/radical", response_model=schemas.RadicalResponse)
def radical(req: schemas.AlgebraRequest) -> dict:
    a = _algebra(req.algebra)
    return _run(reports.radical_report, a)


@app.post("/nilradical", response_model=schemas.NilradicalResponse)
def nilradical(req: schemas.AlgebraRequest) -> dict:
    a = _algebra(req.algebra)
    return _run(reports.nilradical_report, a)


@app.post("/cartan", response_model=schemas.CartanResponse)
def cartan(req: schemas.CartanRequest) -> dict:
    a = _algebra(req.algebra)
    return _run(reports.cartan_report, a, seed=req.seed, max_attempts=req.max_attempts)


@app.post("/tower", response_model=schemas.TowerResponse)
def tower(req: schemas.TowerRequest) -> dict:
    a = _algebra(req.algebra)
    return _run(reports.tower_report, a, max_stages=req.max_stages)


@app.post("/oracle-check", response_model=schemas.OracleCheckResponse)
def oracle_check(req: schemas.OracleCheckRequest) -> dict:
    a = _algebra(req.algebra)
    return _run(reports.oracle_check_report, a)


@app.post("/theorems", response_model=schemas.TheoremsResponse)
def theorems(req: schemas.TheoremsRequest) -> dict:
    a = _algebra(req.algebra)
    return _run(reports.theorems_report, a, seed=req.seed)
