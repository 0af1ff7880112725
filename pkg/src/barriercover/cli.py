"""Command-line front end: generate, solve, verify and benchmark instances.

Exit codes: 0 success / solution found; 1 proven absent or infeasible (or a
failed verification); 2 usage or precondition error; 3 resource limit hit.
A search cutoff is never reported as "no solution".
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import exact, harness, order_dp
from .untangle import untangle as untangle_solution
from .fileio import (
    format_scalar,
    parse_instance,
    parse_scalar,
    serialize_instance,
    serialize_solution,
    load_solution,
)
from .generators import (
    ExactCoverInstance,
    gen_fig5,
    gen_fig6,
    gen_random,
    reduce_exact_cover,
)
from .model import (
    Instance,
    InfeasibleError,
    ResourceLimitError,
    cost,
    moved_indices,
    verify_coverage,
)

EXIT_OK = 0
EXIT_ABSENT = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class _CliError(Exception):
    """Usage-level problem; maps to exit code 2."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barriercover",
        description="Min-sum barrier coverage: move line sensors to cover [0, L].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance file")
    gen.add_argument("--family", required=True, choices=["fig5", "fig6", "random", "exact-cover"])
    gen.add_argument("--rho", help="large-sensor radius (fig5/fig6)")
    gen.add_argument("--length", help="barrier length (fig5) or L for random")
    gen.add_argument("--m", type=int, help="number of unit sensors (fig6)")
    gen.add_argument("--delta", help="gap width between unit intervals (fig6)")
    gen.add_argument("--n", type=int, help="sensor count (random)")
    gen.add_argument("--r-min", type=int, default=1)
    gen.add_argument("--r-max", type=int, default=3)
    gen.add_argument("--x-min", type=int, default=-10)
    gen.add_argument("--x-max", type=int, default=15)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--spec", help="exact-cover JSON: {m, sets, k}")
    gen.add_argument("--out", help="output path (default: stdout)")

    solve = sub.add_parser("solve", help="solve an instance file")
    solve.add_argument("--algo", required=True,
                       choices=["oracle", "dp-exact", "dp-eps", "fpt", "untangle-oracle"])
    solve.add_argument("--budget", help="movement budget (oracle/dp-exact/fpt)")
    solve.add_argument("--eps", help="approximation parameter (dp-eps)")
    solve.add_argument("--node-cap", type=int, default=exact.DEFAULT_NODE_CAP)
    solve.add_argument("--out", help="output path (default: stdout)")
    solve.add_argument("instance", help="instance file path")

    verify = sub.add_parser("verify", help="check a solution file against an instance")
    verify.add_argument("--max-cost", help="fail unless cost <= this bound")
    verify.add_argument("--max-movers", type=int, help="fail unless movers <= this bound")
    verify.add_argument("instance", help="instance file path")
    verify.add_argument("solution", help="solution file path")

    bench = sub.add_parser("bench", help="ratio experiments over a family or directory")
    bench.add_argument("--family", choices=["fig5", "fig6"])
    bench.add_argument("--rho", default="2")
    bench.add_argument("--lengths", help="comma list of L values (fig5)")
    bench.add_argument("--ms", help="comma list of unit-sensor counts (fig6)")
    bench.add_argument("--delta", default="1/8")
    bench.add_argument("--dir", help="directory of .bc instance files")
    bench.add_argument("--algos", default="oracle,dp-optimal")
    bench.add_argument("--reference", default="oracle")
    bench.add_argument("--eps", default="1/2")
    bench.add_argument("--node-cap", type=int, default=exact.DEFAULT_NODE_CAP)
    bench.add_argument("--out", help="output path (default: stdout)")
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _require(args: argparse.Namespace, names: Sequence[str]) -> None:
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            raise _CliError(f"--family {args.family} needs --{name}")


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "fig5":
        _require(args, ["rho", "length"])
        instance = gen_fig5(parse_scalar(args.rho), parse_scalar(args.length))
    elif args.family == "fig6":
        _require(args, ["rho", "m", "delta"])
        instance = gen_fig6(parse_scalar(args.rho), args.m, parse_scalar(args.delta))
    elif args.family == "random":
        _require(args, ["n", "length"])
        instance = gen_random(
            args.n,
            parse_scalar(args.length),
            args.r_min,
            args.r_max,
            (args.x_min, args.x_max),
            args.seed,
        )
    else:  # exact-cover
        _require(args, ["spec"])
        if not args.out:
            raise _CliError("--family exact-cover needs --out for the sidecar file")
        raw = json.loads(Path(args.spec).read_text())
        ec = ExactCoverInstance(
            universe_size=raw["m"],
            sets=tuple(frozenset(s) for s in raw["sets"]),
            max_sets=raw["k"],
        )
        reduced = reduce_exact_cover(ec)
        _emit(serialize_instance(reduced.instance), args.out)
        sidecar = {
            "B": format_scalar(reduced.budget),
            "k": reduced.movers,
            "source_sets": list(reduced.source_sets),
        }
        Path(args.out + ".meta.json").write_text(json.dumps(sidecar, indent=2) + "\n")
        return EXIT_OK
    _emit(serialize_instance(instance), args.out)
    return EXIT_OK


def _load_instance(path: str) -> Instance:
    try:
        return parse_instance(Path(path).read_text())
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise _CliError(f"bad instance file {path}: {exc}") from exc


def _cmd_solve(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)

    def need_budget() -> Fraction:
        if args.budget is None:
            raise _CliError(f"--algo {args.algo} needs --budget")
        return parse_scalar(args.budget)

    try:
        if args.algo == "dp-exact":
            found = order_dp.dp_exact(instance, need_budget())
            solution = found[0] if found else None
        elif args.algo == "dp-eps":
            if args.eps is None:
                raise _CliError("--algo dp-eps needs --eps")
            solution, _ = order_dp.dp_eps(instance, parse_scalar(args.eps))
        elif args.algo == "oracle":
            if args.budget is None:
                found = exact.oracle_optimal(instance, node_cap=args.node_cap)
            else:
                found = exact.brute_force(instance, need_budget(), node_cap=args.node_cap)
            solution = found[0] if found else None
        elif args.algo == "fpt":
            found = exact.fpt_solve(instance, need_budget(), node_cap=args.node_cap)
            solution = found[0] if found else None
        else:  # untangle-oracle
            found = exact.oracle_optimal(instance, node_cap=args.node_cap)
            if found is None:
                solution = None
            else:
                solution, _ = untangle_solution(instance, found[0])
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_ABSENT
    if solution is None:
        print("no solution within the given bounds", file=sys.stderr)
        return EXIT_ABSENT
    _emit(serialize_solution(instance, solution), args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    try:
        solution = load_solution(instance, Path(args.solution).read_text())
    except OSError as exc:
        raise _CliError(f"cannot read {args.solution}: {exc}") from exc
    except ValueError as exc:
        raise _CliError(f"bad solution file: {exc}") from exc
    report = verify_coverage(instance, solution)
    total = cost(instance, solution)
    movers = moved_indices(instance, solution)
    print(f"covered: {'yes' if report.covered else 'no'}")
    for lo, hi in report.gaps:
        print(f"gap: ({format_scalar(lo)}, {format_scalar(hi)})")
    print(f"cost: {format_scalar(total)}")
    print(f"movers: {len(movers)}")
    ok = report.covered
    if args.max_cost is not None and total > parse_scalar(args.max_cost):
        print(f"cost exceeds bound {args.max_cost}", file=sys.stderr)
        ok = False
    if args.max_movers is not None and len(movers) > args.max_movers:
        print(f"mover count exceeds bound {args.max_movers}", file=sys.stderr)
        ok = False
    return EXIT_OK if ok else EXIT_ABSENT


def _cmd_bench(args: argparse.Namespace) -> int:
    if (args.family is None) == (args.dir is None):
        raise _CliError("bench needs exactly one of --family or --dir")
    if args.family == "fig5":
        if not args.lengths:
            raise _CliError("--family fig5 needs --lengths")
        grid = {"rho": [parse_scalar(args.rho)],
                "L": [parse_scalar(v) for v in args.lengths.split(",")]}
        records = harness.ratio_sweep("fig5", grid, node_cap=args.node_cap)
    elif args.family == "fig6":
        if not args.ms:
            raise _CliError("--family fig6 needs --ms")
        grid = {"rho": [parse_scalar(args.rho)],
                "delta": [parse_scalar(args.delta)],
                "m": [int(v) for v in args.ms.split(",")]}
        records = harness.ratio_sweep("fig6", grid, node_cap=args.node_cap)
    else:
        algos = [a for a in args.algos.split(",") if a]
        records = []
        for path in sorted(Path(args.dir).glob("*.bc")):
            instance = _load_instance(str(path))
            records += harness.compare(
                instance,
                algos,
                args.reference,
                instance_id=path.stem,
                eps=parse_scalar(args.eps),
                node_cap=args.node_cap,
            )
    _emit(harness.records_to_csv(records), args.out)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    commands = {
        "gen": _cmd_gen,
        "solve": _cmd_solve,
        "verify": _cmd_verify,
        "bench": _cmd_bench,
    }
    try:
        return commands[args.command](args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, TypeError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_ABSENT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
