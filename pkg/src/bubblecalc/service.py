"""FastAPI service exposing the report builders.

The command line talks to the same builders in-process; this app is the
multi-client surface for long-running deployments.
"""

from fastapi import FastAPI, HTTPException

from . import __version__, reports
from .schemas import (
    ConstantsRequest,
    ConstantsResponse,
    HealthResponse,
    QMatrixRequest,
    QMatrixResponse,
    ThresholdRequest,
    ThresholdResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="bubblecalc",
    version=__version__,
    description="Half-space bubble constants, quadratic-form certificates and "
                "threshold tables, with verification suites.",
)


def _domain_guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health", response_model=HealthResponse)
def health():
    return {"status": "ok", "tool_version": __version__}


@app.post("/constants", response_model=ConstantsResponse)
def constants(request: ConstantsRequest):
    return _domain_guard(reports.constants_report, request.n, request.c)


@app.post("/qmatrix", response_model=QMatrixResponse)
def qmatrix(request: QMatrixRequest):
    return _domain_guard(reports.qmatrix_report, request.n, request.c, request.a)


@app.post("/threshold", response_model=ThresholdResponse)
def threshold(request: ThresholdRequest):
    return _domain_guard(reports.threshold_report, request.n_min, request.n_max, request.tol)


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest):
    return _domain_guard(
        reports.verify_report,
        request.suite,
        seed=request.seed,
        tol=request.tol,
        deterministic=request.deterministic,
    )
