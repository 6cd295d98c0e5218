"""Acceptance gate: one test per criterion, each under its runtime budget.

Every criterion starts from cold in-memory caches so the timings are honest.
A PASS/FAIL line per criterion is printed at the end of the pytest run (see
``conftest.py``), or directly when this file is executed as a script.
"""

from __future__ import annotations

import json
import time
from fractions import Fraction

import pytest

from branchwork import branching, characters, partitions, plethysm, schur_eval
from branchwork.applications import (
    count_dynamics,
    count_graphs,
    dynamics_bruteforce,
    graphs_bruteforce,
    invariant_dimension_check,
)
from branchwork.branching import branch, branch_one, one_row_rule
from branchwork.characters import character_table, mn_character
from branchwork.cli import main
from branchwork.partitions import Partition, centralizer_order, gl_dimension, partitions_of
from branchwork.plethysm import expected_dimension, plethysm_sym, verify_duality
from branchwork.survey import coverage_check, render_csv, render_json, survey_region, theorem_family
from oracles import character_by_tabloids

RESULTS: list[str] = []

SYM_C4 = {
    0: {(4,): 1},
    1: {(4,): 1, (3, 1): 1},
    2: {(4,): 2, (3, 1): 2, (2, 2): 1},
    3: {(4,): 3, (3, 1): 4, (2, 2): 1, (2, 1, 1): 1},
}
N10_VALUES = [4789, 25466, 61323, 88744, 157620, 676, 2302, 4058, 2132, 459, 32, 0]
N10_FAMILIES = {
    2: [(10, 10), (11, 9)],
    3: [(15, 15), (16, 14)],
    4: [(20, 20), (21, 19), (22, 18)],
}


def _cold() -> None:
    characters._memory.clear()
    for fn in (characters._mn, branching._class_weights, partitions.partitions_of, partitions.cycle_types,
               plethysm._sym, plethysm._graded, schur_eval._series, schur_eval._scaled_character_row,
               schur_eval._power_products):
        fn.cache_clear()


def _nonzero(table):
    return {tuple(mu): b for mu, b in table.items() if b}


def criterion_1():
    assert list(branch((3,), 3).multiplicities.values()) == [3, 3, 1]
    assert list(branch((2,), 3).multiplicities.values()) == [2, 2, 0]


def criterion_2():
    for d, expected in SYM_C4.items():
        assert _nonzero(branch((d,), 4)) == expected, d
    for d in range(9):
        table = branch((d,), 4)
        for mu in partitions_of(4):
            assert one_row_rule(d, mu) == table[mu], (d, mu)


def criterion_3():
    sign = (1,) * 10
    assert branch_one((11, 9), sign, 10) == 0
    assert branch_one((10, 10), sign, 10) == 1
    values = list(branch((11, 9), 10).multiplicities.values())
    assert len(values) == 42
    pool = list(values)
    for v in N10_VALUES:
        assert v in pool, v
        pool.remove(v)


def criterion_4():
    for n in range(2, 9):
        for m in (2, 3, 4):
            ok, witnesses = coverage_check(n, m)
            assert ok and set(witnesses) == set(partitions_of(n))
    for m, family in N10_FAMILIES.items():
        assert theorem_family(10, m) == family
        ok, witnesses = coverage_check(10, m)
        assert ok and len(witnesses) == 42
        assert set(witnesses.values()) <= set(map(Partition, family))


def criterion_5():
    mismatches = [
        (mu, (s - b, b))
        for n in range(1, 6) for mu in partitions_of(n)
        for s in range(9) for b in range(s // 2 + 1)
        if not verify_duality(mu, (s - b, b))
    ]
    assert not mismatches, mismatches


def criterion_6():
    report = count_dynamics(3)
    assert report.count == 7 and list(report.summands.values()) == [3, 3, 1]
    for n in range(1, 6):
        assert count_dynamics(n).count == dynamics_bruteforce(n).count, n


def criterion_7():
    for n in range(1, 7):
        assert count_graphs(n).count == graphs_bruteforce(n).count, n
    failing = [n for n in range(1, 5) if not invariant_dimension_check(n)]
    assert not failing, f"invariant_dimension_check fails for n in {failing}"


def criterion_8():
    for n in range(1, 7):
        for size in range(13):
            for lam in partitions_of(size):
                if len(lam) > n:
                    continue
                table = branch(lam, n)
                assert all(isinstance(b, int) and b >= 0 for b in table.multiplicities.values())
                assert table.dimension() == gl_dimension(lam, n), (lam, n)
    for size in range(1, 7):
        for mu in partitions_of(size):
            for m in range(6):
                d = plethysm_sym(mu, m)
                assert all(isinstance(c, int) and c > 0 for c in d.weights.values())
                assert d.dimension() == expected_dimension(mu, m), (mu, m)


def criterion_9():
    for n in range(13):
        t = character_table(n)
        z = [centralizer_order(r) for r in t.partitions]
        for i, a in enumerate(t.values):
            for j, b in enumerate(t.values):
                assert sum(Fraction(x * y, w) for x, y, w in zip(a, b, z)) == (i == j)
        cols = list(zip(*t.values))
        for i, a in enumerate(cols):
            for j, b in enumerate(cols):
                assert sum(x * y for x, y in zip(a, b)) == (z[i] if i == j else 0)
    for n in range(1, 6):
        oracle = character_by_tabloids(n)
        for lam in partitions_of(n):
            for rho in partitions_of(n):
                assert mn_character(lam, rho) == oracle[tuple(lam)][tuple(rho)]


def criterion_10(tmp_path=None):
    outputs = {}
    for jobs in (1, 4, 8):
        records = survey_region(6, 24, jobs)
        outputs[jobs] = (render_csv(records), render_json(records))
    assert outputs[1] == outputs[4] == outputs[8]
    if tmp_path is not None:
        files = []
        for jobs in (1, 4, 8):
            path = tmp_path / f"survey-{jobs}.json"
            assert main(["survey", "--n", "6", "--max-size", "24", "--jobs", str(jobs), "--out", str(path)]) == 0
            files.append(path.read_bytes())
        assert files[0] == files[1] == files[2]
        assert len(json.loads(files[0])) == len(outputs[1][0].splitlines()) - 1


CRITERIA = [
    (1, "small cases at n=3", criterion_1, 1.0),
    (2, "Sym^d C^4 table and one-row rule", criterion_2, 5.0),
    (3, "n=10 claims for (11,9) and (10,10)", criterion_3, 60.0),
    (4, "short-tail coverage", criterion_4, 600.0),
    (5, "branching/plethysm duality", criterion_5, None),
    (6, "dynamical systems", criterion_6, 120.0),
    (7, "graphs and exterior invariants", criterion_7, None),
    (8, "exactness and dimension audits", criterion_8, None),
    (9, "character orthogonality and oracle", criterion_9, None),
    (10, "survey determinism across workers", criterion_10, None),
]


def _run(number, label, fn, budget, **kwargs):
    _cold()
    start = time.perf_counter()
    try:
        fn(**kwargs)
        error = None
    except Exception as exc:  # a ConsistencyError is a failure too
        error = exc
    elapsed = time.perf_counter() - start
    if error is None and budget is not None and elapsed >= budget:
        error = AssertionError(f"took {elapsed:.2f} s, budget {budget} s")
    verdict = "PASS" if error is None else "FAIL"
    line = f"criterion {number:2d} {verdict}  {elapsed:7.2f} s  {label}"
    if error is not None:
        line += f"  [{str(error).splitlines()[0]}]"
    RESULTS.append(line)
    return error


@pytest.mark.parametrize("number,label,fn,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, label, fn, budget, tmp_path):
    kwargs = {"tmp_path": tmp_path} if fn is criterion_10 else {}
    error = _run(number, label, fn, budget, **kwargs)
    if error is not None:
        raise error


if __name__ == "__main__":
    import sys
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as tmp:
        failed = 0
        for number, label, fn, budget in CRITERIA:
            kwargs = {"tmp_path": Path(tmp)} if fn is criterion_10 else {}
            failed += _run(number, label, fn, budget, **kwargs) is not None
            print(RESULTS[-1], flush=True)
    sys.exit(1 if failed else 0)
