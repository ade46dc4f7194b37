"""The self-contained result record returned by every ``verify_*`` routine."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Optional


@dataclass
class Report:
    name: str
    params: dict
    status: str = "pass"
    lhs_terms: int = 0
    rhs_terms: int = 0
    first_discrepancy: Optional[dict] = None
    wall_time_ms: float = 0.0
    counts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, witness: dict) -> None:
        """Record a failure; only the first witness is kept."""
        if self.status == "pass":
            self.status = "fail"
            self.first_discrepancy = witness

    def to_json(self) -> dict:
        return _jsonable(asdict(self))

    def __str__(self) -> str:
        extra = "" if self.passed else f" first_discrepancy={self.first_discrepancy}"
        return f"{self.name} {self.params}: {self.status} ({self.wall_time_ms:.1f} ms){extra}"


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    return obj


@contextmanager
def timed(report: Report):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.wall_time_ms = (time.perf_counter() - start) * 1000.0
