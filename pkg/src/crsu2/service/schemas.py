"""Pydantic request and response models for the HTTP service."""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, PositiveFloat, PositiveInt, model_validator

DEFAULT_LAMBDAS = [0.5, 1.0, 2.0]


class VerifyRequest(BaseModel):
    lambdas: list[PositiveFloat] = Field(default_factory=lambda: list(DEFAULT_LAMBDAS), min_length=1)
    seed: int = 0
    tol: Optional[PositiveFloat] = None
    fd_step: PositiveFloat = 1e-4
    steps: PositiveInt = 1000


class CurvatureRequest(BaseModel):
    lambdas: list[PositiveFloat] = Field(default_factory=lambda: [2.0], min_length=1)
    tol: Optional[PositiveFloat] = None


class SweepRequest(BaseModel):
    lambda_from: PositiveFloat
    lambda_to: PositiveFloat
    samples: int = Field(ge=2)
    seed: int = 0

    @model_validator(mode="after")
    def _ordered_range(self):
        if self.lambda_to < self.lambda_from:
            raise ValueError("lambda_to must not be smaller than lambda_from")
        return self


class SolveRequest(BaseModel):
    lambdas: list[PositiveFloat] = Field(default_factory=lambda: list(DEFAULT_LAMBDAS), min_length=1)
    seed: int = 0
    tol: PositiveFloat = 1e-12
    max_iter: PositiveInt = 50


class TransportRequest(BaseModel):
    lambdas: list[PositiveFloat] = Field(default_factory=lambda: [2.0], min_length=1)
    steps: PositiveInt = 1000
    seed: int = 0
    tol: Optional[PositiveFloat] = None


class CheckRecordModel(BaseModel):
    name: str
    inputs: str
    residual: float
    tolerance: float
    kind: Literal["max", "min"]
    passed: bool


class SummaryModel(BaseModel):
    total: int
    passed: int
    failed: int
    overall_pass: bool


class ReportModel(BaseModel):
    config: dict[str, Any]
    records: list[CheckRecordModel]
    summary: SummaryModel


class CurvaturePair(BaseModel):
    pair: str
    closed_form: list[list[list[float]]]
    bracket_oracle: list[list[list[float]]]


class CurvatureEvaluation(BaseModel):
    lam: float = Field(alias="lambda")
    pairs: list[CurvaturePair]
    harmonic_coefficient: list[float]
    obstruction_magnitude: float

    model_config = {"populate_by_name": True}


class CurvatureReport(ReportModel):
    evaluations: list[CurvatureEvaluation]


class SweepRow(BaseModel):
    lam: float = Field(alias="lambda")
    obstruction_magnitude: float
    normality_residual: float

    model_config = {"populate_by_name": True}


class SweepReport(ReportModel):
    rows: list[SweepRow]


class SolveRun(BaseModel):
    lam: float = Field(alias="lambda")
    iterations: Optional[int] = None
    residual: Optional[float] = None
    max_deviation_from_closed_form: Optional[float] = None
    error: Optional[str] = None

    model_config = {"populate_by_name": True}


class SolveReport(ReportModel):
    solves: list[SolveRun]


class TransportRun(BaseModel):
    lam: float = Field(alias="lambda")
    pairing_drift: float
    oracle_deviation: float

    model_config = {"populate_by_name": True}


class TransportReport(ReportModel):
    runs: list[TransportRun]
