"""Two-row survey: which GL_n irreps (a, b) contain every S_n irrep.

Points of the region a >= b >= 0, a + b <= max_size are classified
independently and can be farmed out to worker processes; results come back
in input order, so output does not depend on the worker count.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .branching import branch
from .characters import character_table
from .errors import TheoremViolation
from .partitions import Partition, partitions_of

CSV_COLUMNS = ["n", "lambda1", "lambda2", "size", "complete", "num_missing", "missing"]


@dataclass(frozen=True)
class SurveyRecord:
    n: int
    lam: Partition
    complete: bool
    missing: tuple[Partition, ...] = ()

    @property
    def lambda1(self) -> int:
        return self.lam.part(0)

    @property
    def lambda2(self) -> int:
        return self.lam.part(1)

    @property
    def size(self) -> int:
        return self.lam.size

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "size": self.size,
            "complete": self.complete,
            "missing": [mu.text() for mu in self.missing],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SurveyRecord":
        missing = tuple(Partition.parse(t) for t in doc["missing"])
        return cls(int(doc["n"]), Partition((doc["lambda1"], doc["lambda2"])), bool(doc["complete"]), missing)

    def csv_row(self) -> list:
        return [
            self.n,
            self.lambda1,
            self.lambda2,
            self.size,
            "true" if self.complete else "false",
            len(self.missing),
            ";".join(mu.text() for mu in self.missing),
        ]


def _two_row(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if len(lam) > 2:
        raise ValueError(f"{lam.text()} is not a two-row shape")
    return lam


def classify(n: int, lam: Iterable[int]) -> SurveyRecord:
    if n < 2:
        raise ValueError("the survey needs n >= 2")
    lam = _two_row(lam)
    missing = tuple(branch(lam, n, character_table(n)).missing())
    return SurveyRecord(n, lam, not missing, missing)


def region_points(max_size: int) -> list[Partition]:
    """All (a, b), a >= b >= 0, a + b <= max_size, by size then b."""
    return [Partition((s - b, b)) for s in range(max_size + 1) for b in range(s // 2 + 1)]


def _classify_chunk(args: tuple[int, Sequence[tuple[int, ...]]]) -> list[SurveyRecord]:
    n, shapes = args
    return [classify(n, lam) for lam in shapes]


def survey_region(n: int, max_size: int, jobs: int = 1) -> list[SurveyRecord]:
    if n < 2:
        raise ValueError("the survey needs n >= 2")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    points = region_points(max_size)
    if jobs == 1 or len(points) < 2:
        return [classify(n, lam) for lam in points]
    step = max(1, len(points) // (4 * jobs))
    chunks = [(n, [tuple(p) for p in points[i:i + step]]) for i in range(0, len(points), step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [rec for part in pool.map(_classify_chunk, chunks) for rec in part]


def theorem_family(n: int, m: int) -> list[Partition]:
    """Two-row shapes (p + d, p) with 2p + d = nm and 0 <= d <= m, by increasing d."""
    if m < 2:
        raise ValueError("the family is defined for m >= 2")
    total = n * m
    return [Partition(((total + d) // 2, (total - d) // 2)) for d in range(total % 2, m + 1, 2)]


def coverage_check(n: int, m: int) -> tuple[bool, dict[Partition, Partition]]:
    """First shape of ``theorem_family(n, m)`` containing each S_n irrep.

    Raises TheoremViolation if some irrep is in none of them.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    table = character_table(n)
    # shapes with more than n rows give the zero representation of GL_n
    tables = [branch(lam, n, table) for lam in theorem_family(n, m) if len(lam) <= n]
    witnesses = {}
    for mu in partitions_of(n):
        hit = next((t.lam for t in tables if t[mu] > 0), None)
        if hit is None:
            raise TheoremViolation(f"Y^{mu.text()} occurs in no shape of the n={n}, m={m} family")
        witnesses[mu] = hit
    return True, witnesses


@dataclass(frozen=True)
class BoundaryCurve:
    """Per second-row length b: least a such that (a', b) is complete for every
    sampled a' >= a, or None if the largest sampled point is incomplete."""

    n: int | None
    minima: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"n": self.n, "minima": {str(b): a for b, a in self.minima.items()}}


def boundary(records: Sequence[SurveyRecord]) -> BoundaryCurve:
    if not records:
        return BoundaryCurve(None, {})
    ns = {r.n for r in records}
    if len(ns) != 1:
        raise ValueError("records must come from a single survey")
    columns: dict[int, list[SurveyRecord]] = {}
    for r in records:
        columns.setdefault(r.lambda2, []).append(r)
    minima = {}
    for b in sorted(columns):
        best = None
        for r in sorted(columns[b], key=lambda r: r.lambda1, reverse=True):
            if not r.complete:
                break
            best = r.lambda1
        minima[b] = best
    return BoundaryCurve(ns.pop(), minima)


def render_csv(records: Iterable[SurveyRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def render_json(records: Iterable[SurveyRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=1) + "\n"
