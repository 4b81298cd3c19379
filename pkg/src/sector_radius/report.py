"""Interval bookkeeping and result records for certified comparisons.

A check compares two real quantities, each known only up to an enclosing
interval.  A pass or fail is *certified* when the intervals do not
overlap; otherwise the verdict falls back to a midpoint tolerance test.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

__all__ = [
    "Interval",
    "CheckResult",
    "IdSummary",
    "SuiteReport",
    "VERDICTS",
    "classify",
]

VERDICTS = (
    "certified_pass",
    "tolerance_pass",
    "certified_fail",
    "inconclusive",
    "inapplicable",
)

# Midpoint fallback used when intervals overlap: lhs <= rhs*(1+REL) + ABS.
TOLERANCE_REL = 1e-7
TOLERANCE_ABS = 1e-9


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] enclosing one real quantity."""

    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise ValueError("interval bounds must not be NaN")
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: float, rel: float = 0.0, abs_: float = 0.0) -> "Interval":
        pad = abs(value) * rel + abs_
        return cls(value - pad, value + pad)

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __mul__(self, other: "Interval") -> "Interval":
        cands = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(cands), max(cands))

    def scale(self, c: float) -> "Interval":
        if c < 0:
            raise ValueError("scale factor must be nonnegative")
        return Interval(self.lo * c, self.hi * c)

    @staticmethod
    def min_of(a: "Interval", b: "Interval") -> "Interval":
        return Interval(min(a.lo, b.lo), min(a.hi, b.hi))


def classify(lhs: Interval, rhs: Interval) -> str:
    """Verdict for the claim lhs <= rhs given enclosing intervals."""
    if lhs.hi <= rhs.lo:
        return "certified_pass"
    if lhs.lo > rhs.hi:
        return "certified_fail"
    if lhs.mid <= rhs.mid * (1.0 + TOLERANCE_REL) + TOLERANCE_ABS:
        return "tolerance_pass"
    return "inconclusive"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one certified comparison, with provenance."""

    id: str
    lhs: Interval
    rhs: Interval
    verdict: str
    ratio: float | None
    seed: int | None = None
    norm: str = "op"
    dim: int | None = None
    note: str = ""

    @classmethod
    def from_comparison(
        cls,
        id: str,
        lhs: Interval,
        rhs: Interval,
        seed: int | None = None,
        norm: str = "op",
        dim: int | None = None,
        note: str = "",
    ) -> "CheckResult":
        verdict = classify(lhs, rhs)
        ratio: float | None
        if rhs.mid != 0.0 and math.isfinite(lhs.mid / rhs.mid):
            ratio = lhs.mid / rhs.mid
        else:
            ratio = None
        return cls(id, lhs, rhs, verdict, ratio, seed, norm, dim, note)

    @classmethod
    def inapplicable(
        cls,
        id: str,
        reason: str,
        seed: int | None = None,
        norm: str = "op",
        dim: int | None = None,
    ) -> "CheckResult":
        zero = Interval(0.0, 0.0)
        return cls(id, zero, zero, "inapplicable", None, seed, norm, dim, reason)

    @property
    def margin(self) -> float:
        """Certified slack rhs.lo - lhs.hi (negative when not certified)."""
        return self.rhs.lo - self.lhs.hi

    def to_obj(self) -> dict:
        return {
            "id": self.id,
            "verdict": self.verdict,
            "lhs": [self.lhs.lo, self.lhs.hi],
            "rhs": [self.rhs.lo, self.rhs.hi],
            "ratio": self.ratio,
            "seed": self.seed,
            "norm": self.norm,
            "dim": self.dim,
            "note": self.note,
        }


@dataclass
class IdSummary:
    trials: int = 0
    verdicts: dict = field(default_factory=lambda: {v: 0 for v in VERDICTS})
    max_ratio: float | None = None
    worst_margin: float | None = None

    def add(self, r: CheckResult) -> None:
        self.trials += 1
        self.verdicts[r.verdict] += 1
        if r.verdict == "inapplicable":
            return
        if r.ratio is not None:
            self.max_ratio = r.ratio if self.max_ratio is None else max(self.max_ratio, r.ratio)
        m = r.margin
        self.worst_margin = m if self.worst_margin is None else min(self.worst_margin, m)

    def to_obj(self) -> dict:
        return {
            "trials": self.trials,
            "verdicts": dict(self.verdicts),
            "max_ratio": self.max_ratio,
            "worst_margin": self.worst_margin,
        }


@dataclass
class SuiteReport:
    """Aggregated outcome of a randomized verification run."""

    config: dict
    per_id: dict
    wall_time_s: float
    results: list

    @property
    def certified_fail_total(self) -> int:
        return sum(s.verdicts["certified_fail"] for s in self.per_id.values())

    @property
    def ok(self) -> bool:
        return self.certified_fail_total == 0

    def summary_obj(self) -> dict:
        return {
            "config": self.config,
            "per_id": {k: v.to_obj() for k, v in self.per_id.items()},
            "certified_fail_total": self.certified_fail_total,
            "ok": self.ok,
            "wall_time_s": self.wall_time_s,
        }

    def report_obj(self) -> dict:
        return {
            "config": self.config,
            "results": [r.to_obj() for r in self.results],
            "summary": self.summary_obj(),
        }

    def to_json(self) -> str:
        return json.dumps(self.report_obj(), indent=2, sort_keys=True, allow_nan=False)
