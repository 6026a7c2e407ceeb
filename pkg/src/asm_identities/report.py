"""Structured results of identity checks."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "value") and hasattr(obj, "name"):  # enums
        return obj.value
    return obj


@dataclass
class CheckReport:
    """Pass/fail outcome of one identity check.

    ``witnesses`` holds mismatch records and must be empty on a pass.
    ``seed`` is always recorded, also for checks that draw no samples.
    """

    identity: str
    n: int
    passed: bool
    trials: int = 0
    seed: int = 0
    witnesses: list = field(default_factory=list)
    notes: str = ""
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed and self.witnesses:
            raise ValueError("a passing report cannot carry witnesses")

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        d = {
            "identity": self.identity,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "pass": self.passed,
            "witnesses": _jsonable(self.witnesses),
            "normalization_notes": self.notes,
        }
        if self.details:
            d["details"] = _jsonable(self.details)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(",", ":"))

    CSV_HEADER = ("identity", "n", "trials", "seed", "pass", "witness_count", "normalization_notes")

    def csv_row(self) -> tuple:
        return (self.identity, self.n, self.trials, self.seed, int(self.passed), len(self.witnesses), self.notes)

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(self.CSV_HEADER)
        w.writerow(self.csv_row())
        return buf.getvalue()

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" trials={self.trials} seed={self.seed}" if self.trials else ""
        return f"[{status}] {self.identity} n={self.n}{extra}"


def combine(identity: str, n: int, reports: list, notes: str = "") -> CheckReport:
    """Fold several reports into one; fails if any part fails."""
    witnesses = [dict(w, part=r.identity) for r in reports for w in r.witnesses]
    return CheckReport(
        identity=identity,
        n=n,
        passed=all(r.passed for r in reports),
        trials=sum(r.trials for r in reports),
        seed=reports[0].seed if reports else 0,
        witnesses=witnesses,
        notes=notes,
        details={"parts": [r.to_dict() for r in reports]},
    )
