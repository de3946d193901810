"""Command-line front end: solve, compare, verify, gen.

Instance files are UTF-8 text with one string per line; ``#`` starts a
comment line, blank lines are ignored, and strings must consist of printable
non-whitespace ASCII.  JSON reports have the flat shape

    {command, seed, timestamp, instance: {n, total_length},
     results: [{algo, length, overlap, order, ms}],
     verification: {run, held, failed, violations}}

with exact rationals rendered as "p/q" strings.  Reports are byte-identical
across repeated runs with the same seed, except for the timestamp and the
per-result ms timings.  Exit codes: 0 success, 1 unreadable or empty input,
2 exact-solver limit exceeded, 3 internal validation failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

from . import bounds
from .atsp import (
    DEFAULT_EXACT_LIMIT,
    SolverLimitError,
    cycle_cover_path,
    exact_max_path,
    greedy_max_path,
)
from .graph import DegenerateInstanceError, Instance, normalize
from .pipeline import (
    exact_superstring,
    greedy_superstring,
    solve_combined,
    solve_s1,
    solve_s2,
    validate_superstring,
)

_PRINTABLE = set(range(33, 127))


class InputError(Exception):
    pass


def read_instance_file(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    strings = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        if not line or line.startswith("#"):
            continue
        if any(ord(c) not in _PRINTABLE for c in line):
            raise InputError(
                f"{path}:{lineno}: strings must be printable non-whitespace ASCII")
        strings.append(line)
    if not strings:
        raise InputError(f"{path}: no strings found")
    return strings


def _path_solver(name: str, exact_limit: int):
    if name == "exact":
        solver = lambda m: exact_max_path(m, limit=exact_limit)  # noqa: E731
        solver.__name__ = "exact_max_path"
        return solver
    return {"half": cycle_cover_path, "greedy": greedy_max_path}[name]


def _report_skeleton(args, seed=None) -> dict:
    return {
        "command": " ".join(args),
        "seed": seed,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "instance": None,
        "results": [],
        "verification": {"run": 0, "held": 0, "failed": 0, "violations": []},
    }


def _write_json(path: str | None, report: dict) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _timed(fn, *a, **kw):
    t0 = time.perf_counter()
    out = fn(*a, **kw)
    return out, (time.perf_counter() - t0) * 1000.0


_ALGOS = ("combined", "s1", "s2", "greedy", "exact")


def _run_algo(algo: str, inst: Instance, path_solver, exact_limit: int):
    if algo == "combined":
        return solve_combined(inst, path_solver)
    if algo == "s1":
        return solve_s1(inst, path_solver)
    if algo == "s2":
        return solve_s2(inst)
    if algo == "greedy":
        return greedy_superstring(inst)
    return exact_superstring(inst, limit=exact_limit)


def _result_entry(algo: str, sol, ms: float) -> dict:
    return {"algo": algo, "length": sol.length, "overlap": sol.total_overlap,
            "order": list(sol.order), "ms": round(ms, 3)}


def _load_normalized(path: str):
    strings = read_instance_file(path)
    return normalize(strings)


def cmd_solve(args, argv) -> int:
    report = _report_skeleton(argv)
    try:
        inst, removed = _load_normalized(args.input)
    except DegenerateInstanceError as exc:
        if len(exc.survivors) == 1:
            text = exc.survivors[0]
            print("warning: instance degenerates to a single string",
                  file=sys.stderr)
            report["instance"] = {"n": 1, "total_length": len(text)}
            report["results"] = [{"algo": args.algo, "length": len(text),
                                  "overlap": 0, "order": [0], "ms": 0.0}]
            _write_json(args.json, report)
            print(text)
            return 0
        print("error: no usable strings in input", file=sys.stderr)
        return 1
    for reason, s in removed:
        print(f"warning: dropped {reason} string {s!r}", file=sys.stderr)
    report["instance"] = {"n": len(inst), "total_length": inst.total_length}
    solver = _path_solver(args.path_solver, args.exact_limit)
    sol, ms = _timed(_run_algo, args.algo, inst, solver, args.exact_limit)
    if not validate_superstring(inst, sol.text) or sol.length != len(sol.text):
        print("internal error: output failed validation", file=sys.stderr)
        return 3
    report["verification"] = {"run": 1, "held": 1, "failed": 0, "violations": []}
    report["results"] = [_result_entry(args.algo, sol, ms)]
    _write_json(args.json, report)
    print(sol.text)
    print(f"algorithm: {sol.algorithm}")
    print(f"length: {sol.length}  total_overlap: {sol.total_overlap}")
    print(f"order: {' '.join(map(str, sol.order))}")
    return 0


def cmd_compare(args, argv) -> int:
    report = _report_skeleton(argv)
    try:
        inst, removed = _load_normalized(args.input)
    except DegenerateInstanceError:
        print("error: fewer than two strings after normalization",
              file=sys.stderr)
        return 1
    for reason, s in removed:
        print(f"warning: dropped {reason} string {s!r}", file=sys.stderr)
    report["instance"] = {"n": len(inst), "total_length": inst.total_length}
    solver = _path_solver(args.path_solver, args.exact_limit)
    algos = list(_ALGOS) if len(inst) <= args.exact_limit else \
        [a for a in _ALGOS if a != "exact"]
    solutions = {}
    checks = {"run": 0, "held": 0, "failed": 0, "violations": []}
    for algo in algos:
        sol, ms = _timed(_run_algo, algo, inst, solver, args.exact_limit)
        checks["run"] += 1
        if not validate_superstring(inst, sol.text):
            return 3
        checks["held"] += 1
        solutions[algo] = sol
        report["results"].append(_result_entry(algo, sol, ms))
    report["verification"] = checks
    best = min(sol.length for sol in solutions.values())
    print(f"{'algorithm':<10} {'length':>7} {'overlap':>8} {'ratio':>7}")
    for algo in algos:
        sol = solutions[algo]
        print(f"{algo:<10} {sol.length:>7} {sol.total_overlap:>8} "
              f"{sol.length / best:>7.3f}")
    _write_json(args.json, report)
    return 0


_SUITES = ("pairs", "cycles", "tight", "all")


def _campaign_chunk(task):
    name, seed, start, count = task
    if name == "pairs":
        return bounds.pair_fuzz(count, seed, start=start)
    if name == "cycles":
        return bounds.cycle_fuzz(count, seed, start=start)
    return bounds.pipeline_cycle_fuzz(count, seed, start=start)


def _merge_chunks(chunks):
    merged = chunks[0]
    for part in chunks[1:]:
        merged.cases += part.cases
        merged.checks_run += part.checks_run
        merged.checks_held += part.checks_held
        for key, count in part.applicable_counts.items():
            merged.applicable_counts[key] = \
                merged.applicable_counts.get(key, 0) + count
        merged.violations.extend(part.violations)
        merged.anomalies.extend(part.anomalies)
    return merged


def _run_fuzz(name: str, trials: int, seed: int, workers: int):
    if workers <= 1:
        return [_campaign_chunk((name, seed, 0, trials))]
    step = -(-trials // workers)
    tasks = [(name, seed, lo, min(step, trials - lo))
             for lo in range(0, trials, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [_merge_chunks(list(pool.map(_campaign_chunk, tasks)))]


def cmd_verify(args, argv) -> int:
    report = _report_skeleton(argv, seed=args.seed)
    campaigns = []
    if args.suite in ("pairs", "all"):
        campaigns += _run_fuzz("pairs", args.trials, args.seed, args.workers)
    if args.suite in ("cycles", "all"):
        campaigns += _run_fuzz("cycles", args.trials, args.seed, args.workers)
        campaigns += _run_fuzz("pipeline", args.trials, args.seed, args.workers)
    if args.suite in ("tight", "all"):
        campaigns.append(bounds.tight_sweep(64, 64))
        campaigns.append(bounds.greedy_chain_sweep(40))
    verification = {"run": 0, "held": 0, "failed": 0, "violations": []}
    for c in campaigns:
        verification["run"] += c.checks_run
        verification["held"] += c.checks_held
        verification["failed"] += c.checks_failed
        verification["violations"].extend(c.violations)
        for note in c.anomalies:
            print(f"note[{c.name}]: {note}", file=sys.stderr)
        print(f"{c.name:<16} cases={c.cases:<7} checks={c.checks_run:<8} "
              f"failed={c.checks_failed}")
    report["verification"] = verification
    _write_json(args.json, report)
    if verification["failed"]:
        print(f"FAILED: {verification['failed']} violating checks")
        return 1
    print("all checks held")
    return 0


def cmd_gen(args, argv) -> int:
    sidecar = None
    if args.family == "tight2":
        fixture = bounds.gen_tight_2cycle(args.k)
        strings = [x for _, x in fixture.nodes]
        sidecar = bounds.expected_tight_2cycle(args.k)
        header = f"# family=tight2 k={args.k}"
    elif args.family == "tight3":
        fixture = bounds.gen_tight_3cycle(args.n)
        strings = [x for _, x in fixture.nodes]
        sidecar = bounds.expected_tight_3cycle(args.n)
        header = f"# family=tight3 n={args.n}"
    elif args.family == "greedy":
        inst, expected = bounds.gen_greedy_path(args.n)
        strings = list(inst.strings)
        sidecar = {"family": "greedy", "n": args.n,
                   "overlaps": expected,
                   "periods": list(range(3, args.n + 1))}
        header = f"# family=greedy n={args.n}"
    else:
        rng = random.Random(args.seed)
        for _ in range(10000):
            inst = bounds.gen_random_instance(
                rng, n_range=(args.n, args.n),
                length_range=(args.min_len, args.max_len),
                alphabet_size=args.alphabet)
            if len(inst) == args.n:
                break
        else:
            print("error: could not generate a substring-free instance "
                  "of the requested size", file=sys.stderr)
            return 1
        strings = list(inst.strings)
        header = f"# family=random n={args.n} seed={args.seed}"
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(header + "\n")
        fh.write("\n".join(strings) + "\n")
    if sidecar is not None:
        with open(args.output + ".expected.json", "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print(f"wrote {len(strings)} strings to {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superstring",
        description="Superstring construction and overlap-bound verification")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", metavar="OUT", default=None,
                       help="write a JSON run report to OUT")
        p.add_argument("--exact-limit", type=int, default=DEFAULT_EXACT_LIMIT,
                       help="node limit for the exact solvers (memory grows "
                            "as 2^n)")
        p.add_argument("--path-solver", choices=("exact", "half", "greedy"),
                       default="exact")

    p = sub.add_parser("solve", help="compute one superstring")
    p.add_argument("input", help="instance file, one string per line")
    p.add_argument("--algo", choices=_ALGOS, default="combined")
    add_common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("compare", help="run all algorithms and tabulate")
    p.add_argument("input")
    add_common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run bound-verification campaigns")
    p.add_argument("--suite", choices=_SUITES, default="all")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", metavar="OUT", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate instance files")
    p.add_argument("--family", choices=("tight2", "tight3", "greedy", "random"),
                   required=True)
    p.add_argument("-k", type=int, default=1, help="tight2 parameter")
    p.add_argument("-n", type=int, default=6,
                   help="tight3 parameter / chain length / random count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--min-len", type=int, default=4)
    p.add_argument("--max-len", type=int, default=12)
    p.add_argument("output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SolverLimitError as exc:
        print(f"error: {exc} (raise --exact-limit to override)", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
