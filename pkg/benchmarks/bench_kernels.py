"""Compare the compiled and pure-Python kernel backends.

Each workload runs in a fresh interpreter, once with the default backend and
once with BRANCHWORK_PURE_PYTHON=1, so in-process caches never leak between
the two. Usage::

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys

WORKLOADS = {
    "survey n=12, max_size=24": "from branchwork.survey import survey_region; survey_region(12, 24)",
    "graph orbits n=6": "from branchwork.applications import graphs_bruteforce; graphs_bruteforce(6)",
    "dynamics orbits n=5": "from branchwork.applications import dynamics_bruteforce; dynamics_bruteforce(5)",
    "plethysm (4,3,2,1), Sym^8": "from branchwork.plethysm import plethysm_sym; plethysm_sym((4, 3, 2, 1), 8)",
    "graded (3,3), degree <= 30": "from branchwork.plethysm import plethysm_graded; plethysm_graded((3, 3), 30)",
}

TIMER = """
import time
import branchwork
start = time.perf_counter()
{stmt}
print(branchwork.BACKEND, time.perf_counter() - start)
"""


def time_once(stmt: str, pure: bool) -> tuple[str, float]:
    env = dict(os.environ)
    env.pop("BRANCHWORK_PURE_PYTHON", None)
    if pure:
        env["BRANCHWORK_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", TIMER.format(stmt=stmt)], env=env,
                         capture_output=True, text=True, check=True)
    backend, seconds = out.stdout.split()
    return backend, float(seconds)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="runs per workload and backend; best is kept")
    args = parser.parse_args()
    print(f"{'workload':32s} {'compiled':>10s} {'python':>10s} {'speedup':>8s}")
    for name, stmt in WORKLOADS.items():
        fast = [time_once(stmt, pure=False) for _ in range(args.repeat)]
        slow = [time_once(stmt, pure=True) for _ in range(args.repeat)]
        backend = fast[0][0]
        best_fast, best_slow = min(t for _, t in fast), min(t for _, t in slow)
        label = f"{best_fast:9.3f}s" if backend == "cython" else "  (n/a)  "
        print(f"{name:32s} {label:>10s} {best_slow:9.3f}s {best_slow / best_fast:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
