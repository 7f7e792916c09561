"""Check records, reports and deterministic serialization helpers."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

import numpy as np


def inputs_digest(inputs: dict) -> str:
    """Short stable digest of a check's input description."""
    blob = json.dumps(inputs, sort_keys=True, default=str).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


@dataclass(frozen=True)
class CheckRecord:
    """One named check: pass iff residual < tolerance (kind 'max') or
    residual > tolerance (kind 'min', for quantities bounded away from zero)."""

    name: str
    inputs: str
    residual: float
    tolerance: float
    kind: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "kind": self.kind,
            "passed": self.passed,
        }


def make_record(
    name: str,
    inputs: dict,
    residual: float,
    tolerance: float,
    kind: str = "max",
) -> CheckRecord:
    residual = float(residual)
    tolerance = float(tolerance)
    if kind == "max":
        passed = residual < tolerance
    elif kind == "min":
        passed = residual > tolerance
    else:
        raise ValueError(f"unknown record kind {kind!r}")
    return CheckRecord(
        name=name,
        inputs=inputs_digest(inputs),
        residual=residual,
        tolerance=tolerance,
        kind=kind,
        passed=passed,
    )


@dataclass
class Report:
    """Aggregated check results plus an echo of the generating config."""

    config: dict
    records: list = field(default_factory=list)

    def extend(self, records) -> None:
        self.records.extend(records)

    @property
    def overall_pass(self) -> bool:
        return all(r.passed for r in self.records)

    def summary(self) -> dict:
        passed = sum(1 for r in self.records if r.passed)
        return {
            "total": len(self.records),
            "passed": passed,
            "failed": len(self.records) - passed,
            "overall_pass": self.overall_pass,
        }

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "records": [r.to_dict() for r in self.records],
            "summary": self.summary(),
        }


def serialize_complex(z: complex) -> list:
    return [float(np.real(z)), float(np.imag(z))]


def serialize_matrix(m: np.ndarray) -> list:
    """Row-major nested list; each complex entry as [re, im]."""
    return [[serialize_complex(m[i, j]) for j in range(m.shape[1])] for i in range(m.shape[0])]


def matrix_from_serialized(rows: list) -> np.ndarray:
    return np.array(
        [[complex(entry[0], entry[1]) for entry in row] for row in rows],
        dtype=complex,
    )
