"""HTTP front end exposing the solver jobs.

Run with ``uvicorn polycert.service:app`` or ``polycert serve``.  The
endpoints mirror the CLI commands and share their handlers; request and
response schemas carry complex numbers as [re, im] pairs.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .errors import SolverError
from .jobs import JobOptions, JobSpec, Pair, run_job

app = FastAPI(title="polycert", version=__version__)


class SolveRequest(BaseModel):
    coeffs: list[Pair] = Field(..., description="ascending [re, im] coefficient pairs")
    target: Pair = (0.0, 0.0)
    start: Pair = (0.0, 0.0)
    tol: float = Field(default=1e-10, gt=0.0)
    max_steps: int = Field(default=10_000, ge=1)
    rho_cap: Optional[float] = Field(default=None, gt=0.0)
    trace: bool = False


class DemoCompositeRequest(BaseModel):
    tol: float = Field(default=1e-8, gt=0.0)


class TraceStepModel(BaseModel):
    z: Pair
    w: Pair
    r: float


class TraceModel(BaseModel):
    target: Pair
    converged: bool
    steps: list[TraceStepModel]


class RootsResponse(BaseModel):
    roots: list[Pair]
    residuals: list[float]
    trace: Optional[TraceModel] = None


class PreimageResponse(BaseModel):
    z: Pair
    residual: float
    iterations: int
    branch: str


class CertifyResponse(BaseModel):
    z0: Pair
    w0: Pair
    rho: float
    r: float
    alpha: float
    k: int


class CompositeResponse(BaseModel):
    s_star: Pair
    t: Pair
    u: Pair
    z: Pair
    residual: float


def _job(command: str, request: SolveRequest) -> JobSpec:
    return JobSpec(
        command=command,
        coeffs=request.coeffs,
        options=JobOptions(
            target=request.target,
            start=request.start,
            tol=request.tol,
            max_steps=request.max_steps,
            rho_cap=request.rho_cap,
            trace=request.trace,
        ),
    )


def _run(job: JobSpec) -> dict:
    try:
        return run_job(job)
    except SolverError as exc:
        raise HTTPException(
            status_code=422,
            detail={"error": type(exc).__name__, "message": str(exc)},
        )
    except ValueError as exc:
        raise HTTPException(status_code=422, detail={"error": "ValueError", "message": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/root", response_model=RootsResponse, response_model_exclude_none=True)
def root(request: SolveRequest):
    return _run(_job("root", request))


@app.post("/all-roots", response_model=RootsResponse, response_model_exclude_none=True)
def all_roots_endpoint(request: SolveRequest):
    return _run(_job("all-roots", request))


@app.post("/preimage", response_model=PreimageResponse)
def preimage(request: SolveRequest):
    return _run(_job("preimage", request))


@app.post("/certify", response_model=CertifyResponse)
def certify(request: SolveRequest):
    return _run(_job("certify", request))


@app.post("/demo-composite", response_model=CompositeResponse)
def demo_composite(request: DemoCompositeRequest | None = None):
    tol = request.tol if request is not None else 1e-8
    job = JobSpec(command="demo-composite", options=JobOptions(tol=tol))
    return _run(job)
