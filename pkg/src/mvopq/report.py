"""Structured pass/fail records for exact verifications."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from . import exact
from .matpoly import MatPoly


def to_witness(obj) -> Any:
    """Convert a MatPoly, matrix or rational into a JSON-ready witness."""
    if obj is None:
        return None
    if isinstance(obj, MatPoly):
        return {"matpoly": obj.to_json()}
    if isinstance(obj, np.ndarray):
        return {"matrix": exact.matrix_to_json(obj)}
    if isinstance(obj, Fraction):
        return exact.fraction_str(obj)
    if isinstance(obj, dict):
        return {k: to_witness(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_witness(v) for v in obj]
    return obj


def from_witness(data) -> Any:
    """Inverse of :func:`to_witness` for the structured cases."""
    if isinstance(data, dict):
        if set(data) == {"matpoly"}:
            return MatPoly.from_json(data["matpoly"])
        if set(data) == {"matrix"}:
            return exact.matrix_from_json(data["matrix"])
        return {k: from_witness(v) for k, v in data.items()}
    if isinstance(data, list):
        return [from_witness(v) for v in data]
    return data


@dataclass
class Record:
    name: str
    verdict: bool
    n: int | None = None
    witness: Any = None
    advisory: bool = False
    note: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "verdict": "pass" if self.verdict else "fail",
            "advisory": self.advisory,
            "note": self.note,
            "witness": self.witness,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Record":
        return cls(
            name=data["name"],
            verdict=data["verdict"] == "pass",
            n=data.get("n"),
            witness=data.get("witness"),
            advisory=bool(data.get("advisory", False)),
            note=data.get("note", ""),
        )


@dataclass
class VerifyReport:
    """Outcome of one verification case.

    ``overall`` passes iff every non-advisory record passes; advisory records
    (informational findings) never flip it.
    """

    case_id: str
    horizon: dict = field(default_factory=dict)
    records: list[Record] = field(default_factory=list)

    def add(self, name: str, verdict: bool, n: int | None = None, witness=None,
            advisory: bool = False, note: str = "") -> Record:
        rec = Record(name, bool(verdict), n, None if verdict and not advisory else to_witness(witness),
                     advisory, note)
        self.records.append(rec)
        return rec

    def extend(self, other: "VerifyReport", prefix: str = "") -> None:
        for r in other.records:
            self.records.append(Record(prefix + r.name, r.verdict, r.n, r.witness, r.advisory, r.note))

    @property
    def overall(self) -> bool:
        return all(r.verdict for r in self.records if not r.advisory)

    def __bool__(self) -> bool:
        return self.overall

    def failures(self) -> list[Record]:
        return [r for r in self.records if not r.verdict and not r.advisory]

    def find(self, name: str, n: int | None = None) -> list[Record]:
        return [r for r in self.records if r.name == name and (n is None or r.n == n)]

    def to_json(self) -> dict:
        records = sorted(self.records, key=lambda r: (r.name, -1 if r.n is None else r.n))
        return {
            "case_id": self.case_id,
            "horizon": self.horizon,
            "overall": "pass" if self.overall else "fail",
            "records": [r.to_json() for r in records],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict) -> "VerifyReport":
        return cls(data["case_id"], dict(data.get("horizon", {})),
                   [Record.from_json(r) for r in data["records"]])

    def summary(self) -> str:
        bad = self.failures()
        adv = [r for r in self.records if r.advisory]
        line = f"{self.case_id}: {'PASS' if self.overall else 'FAIL'} ({len(self.records)} records"
        if bad:
            line += f", {len(bad)} failed"
        if adv:
            line += f", {len(adv)} advisory"
        return line + ")"
