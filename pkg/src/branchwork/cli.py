"""branchwork command line: branching, plethysm, surveys and counts.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path

from .applications import (
    DYNAMICS_ORACLE_MAX,
    GRAPH_ORACLE_MAX,
    count_dynamics,
    count_graphs,
    dynamics_bruteforce,
    graphs_bruteforce,
)
from .branching import branch
from .characters import cache_path, character_table, file_checksum
from .errors import ConsistencyError, TheoremViolation
from .kernels import BACKEND
from .partitions import Partition
from .plethysm import plethysm_sym, verify_theorem
from .survey import boundary, coverage_check, render_csv, render_json, survey_region, theorem_family

log = logging.getLogger("branchwork")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3
CACHE_ENV = "BRANCHWORK_CACHE_DIR"


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    cache_dir: Path
    jobs: int
    format: str
    verbosity: int


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "branchwork"


def resolve_cache_dir(flag: str | None) -> Path:
    if flag:
        return Path(flag)
    if os.environ.get(CACHE_ENV):
        return Path(os.environ[CACHE_ENV])
    return default_cache_dir()


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _m_list(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed m list: {text!r}") from None
    if any(v < 2 for v in values):
        raise argparse.ArgumentTypeError("every m must be at least 2")
    return values


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2)


def _table(cfg: RunConfig, n: int):
    # Library calls share the in-memory table; the disk cache is a convenience here.
    try:
        return character_table(n, cfg.cache_dir)
    except OSError as exc:
        log.warning("character table cache unavailable (%s); computing in memory", exc)
        return character_table(n)


def cmd_branch(args, cfg: RunConfig) -> int:
    lam, n = args.shape, args.n
    if len(lam) > n:
        raise InputError(f"shape {lam.text()} has {len(lam)} parts, more than n={n}")
    result = branch(lam, n, _table(cfg, n))
    if cfg.format == "json":
        _emit(_dumps(result.to_json()))
    elif cfg.format == "csv":
        _emit("mu,multiplicity\n" + "\n".join(f'"{mu.text()}",{b}' for mu, b in result.items()))
    else:
        _emit(f"F^({lam.text()}) restricted to S_{n}:")
        for mu, b in result.items():
            _emit(f"  {mu.text():>20s}  {b}")
    return EXIT_OK


def cmd_plethysm(args, cfg: RunConfig) -> int:
    mu, m = args.mu, args.m
    if m < 0:
        raise InputError("m must be non-negative")
    result = plethysm_sym(mu, m)
    witnesses = verify_theorem(mu, m) if m >= 2 and 1 <= mu.size and len(mu) <= m + 1 else None
    if cfg.format == "json":
        _emit(_dumps(result.to_json(witnesses)))
    elif cfg.format == "csv":
        _emit("lambda1,lambda2,multiplicity\n" + "\n".join(f"{a},{b},{c}" for (a, b), c in result.weights.items()))
    else:
        _emit(f"F^({mu.text()})(Sym^{m} C^2):")
        for (a, b), c in result.weights.items():
            _emit(f"  ({a},{b})  {c}")
        if witnesses is not None:
            _emit(f"witnesses d: {witnesses}")
    return EXIT_OK


def cmd_survey(args, cfg: RunConfig) -> int:
    if args.n < 2:
        raise InputError("survey needs n >= 2")
    if args.max_size < 0:
        raise InputError("max-size must be non-negative")
    fmt = args.format
    if fmt is None:
        fmt = "json" if args.out and str(args.out).endswith(".json") else "csv"
    _table(cfg, args.n)
    records = survey_region(args.n, args.max_size, cfg.jobs)
    text = render_json(records) if fmt == "json" else render_csv(records)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    complete = sum(r.complete for r in records)
    curve = boundary(records)
    summary = f"n={args.n} max_size={args.max_size}: {complete} complete, {len(records) - complete} incomplete"
    print(summary, file=sys.stdout if args.out else sys.stderr)
    log.info("boundary %s", curve.minima)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    if args.n < 1:
        raise InputError("n must be at least 1")
    _table(cfg, args.n)
    status = EXIT_OK
    report = []
    for m in args.m:
        family = theorem_family(args.n, m)
        try:
            _, witnesses = coverage_check(args.n, m)
        except TheoremViolation as exc:
            status = EXIT_FAIL
            report.append({"m": m, "family": [f.text() for f in family], "pass": False, "error": str(exc)})
            continue
        report.append({
            "m": m,
            "family": [f.text() for f in family],
            "pass": True,
            "witnesses": {mu.text(): lam.text() for mu, lam in witnesses.items()},
        })
    if cfg.format == "json":
        _emit(_dumps({"n": args.n, "results": report}))
    else:
        for entry in report:
            verdict = "pass" if entry["pass"] else "FAIL"
            _emit(f"n={args.n} m={entry['m']} family {' '.join(entry['family'])}: {verdict}")
            if entry["pass"]:
                for mu, lam in entry["witnesses"].items():
                    _emit(f"  {mu:>20s} <- ({lam})")
            else:
                _emit(f"  {entry['error']}")
    return status


def cmd_count(args, cfg: RunConfig) -> int:
    if args.n < 1:
        raise InputError("n must be at least 1")
    if args.kind == "graphs":
        formula, oracle, guard = count_graphs, graphs_bruteforce, GRAPH_ORACLE_MAX
    else:
        formula, oracle, guard = count_dynamics, dynamics_bruteforce, DYNAMICS_ORACLE_MAX
    if args.oracle and args.n > guard:
        raise InputError(f"the {args.kind} oracle is limited to n <= {guard}")
    if args.kind == "dynamics":
        _table(cfg, args.n)
    reports = [formula(args.n)]
    if args.oracle:
        reports.append(oracle(args.n))
    agree = len({r.count for r in reports}) == 1
    if cfg.format == "json":
        doc = {"reports": [r.to_json() for r in reports]}
        if args.oracle:
            doc["agree"] = agree
        _emit(_dumps(doc))
    else:
        for r in reports:
            line = f"{r.kind} n={r.n} {r.method}: {r.count}"
            if r.summands:
                line += "  (" + " + ".join(map(str, r.summands.values())) + ")"
            _emit(line)
        if args.oracle:
            _emit(f"{reports[0].count} = {reports[1].count}: {'agree' if agree else 'DISAGREE'}")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_chartable(args, cfg: RunConfig) -> int:
    if args.n < 1:
        raise InputError("n must be at least 1")
    path = cache_path(cfg.cache_dir, args.n)
    existed = path.exists()
    before = file_checksum(path) if existed else None
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        character_table(args.n, cfg.cache_dir)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    digest = file_checksum(path)
    state = "reused" if existed and before == digest and not caught else "written"
    _emit(f"{path} sha256={digest} ({state})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", help=f"character table cache (default: ${CACHE_ENV} or ~/.cache/branchwork)")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    common.add_argument("--format", choices=["json", "csv", "text"], default=None)
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="branchwork", description=__doc__.splitlines()[0], parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("branch", parents=[common], help="decompose F^lam_n over S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shape", type=_partition_arg, required=True)
    p.set_defaults(run=cmd_branch)

    p = sub.add_parser("plethysm", parents=[common], help="decompose F^mu(Sym^m C^2) over GL_2")
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(run=cmd_plethysm)

    p = sub.add_parser("survey", parents=[common], help="classify two-row shapes as complete or not")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(run=cmd_survey)

    p = sub.add_parser("verify", parents=[common], help="check short-tail coverage of every S_n irrep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=_m_list, required=True, help="comma-separated m values, each >= 2")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("count", parents=[common], help="count graphs or dynamical systems")
    p.add_argument("kind", choices=["graphs", "dynamics"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force orbit count")
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("chartable", parents=[common], help="build and cache the S_n character table")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(run=cmd_chartable)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    cfg = RunConfig(
        cache_dir=resolve_cache_dir(args.cache_dir),
        jobs=args.jobs,
        format=args.format or ("text" if args.command != "survey" else "csv"),
        verbosity=args.verbose,
    )
    try:
        return args.run(args, cfg)
    except (InputError, ValueError) as exc:
        print(f"branchwork {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ConsistencyError, TheoremViolation) as exc:
        print(f"branchwork {args.command}: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"branchwork {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
