"""FastAPI service exposing the verification and computation commands.

Every endpoint is a pure function of its request body, so responses are
deterministic for a fixed payload (seeds included), and the service can be
scaled to any number of workers without coordination.
"""

from __future__ import annotations

from fastapi import FastAPI

from .. import __version__, checks
from .schemas import (
    CurvatureReport,
    CurvatureRequest,
    ReportModel,
    SolveReport,
    SolveRequest,
    SweepReport,
    SweepRequest,
    TransportReport,
    TransportRequest,
    VerifyRequest,
)

app = FastAPI(
    title="crsu2",
    version=__version__,
    description=(
        "Canonical Cartan connections for the one-parameter family of "
        "left-invariant CR structures on SU(2): invariant verification, "
        "curvature evaluation, parameter sweeps, connection rederivation "
        "and tractor transport."
    ),
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/verify", response_model=ReportModel)
def verify(request: VerifyRequest):
    return checks.run_verify(
        lambdas=request.lambdas,
        seed=request.seed,
        tol=request.tol,
        fd_step=request.fd_step,
        steps=request.steps,
    )


@app.post("/curvature", response_model=CurvatureReport)
def curvature(request: CurvatureRequest):
    return checks.run_curvature(lambdas=request.lambdas, tol=request.tol)


@app.post("/sweep", response_model=SweepReport)
def sweep(request: SweepRequest):
    return checks.run_sweep(
        lambda_from=request.lambda_from,
        lambda_to=request.lambda_to,
        samples=request.samples,
        seed=request.seed,
    )


@app.post("/solve", response_model=SolveReport)
def solve(request: SolveRequest):
    return checks.run_solve(
        lambdas=request.lambdas,
        seed=request.seed,
        tol=request.tol,
        max_iter=request.max_iter,
    )


@app.post("/transport", response_model=TransportReport)
def transport(request: TransportRequest):
    return checks.run_transport(
        lambdas=request.lambdas,
        steps=request.steps,
        seed=request.seed,
        tol=request.tol,
    )
