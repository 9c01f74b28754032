"""Command line interface.

Exit codes: 0 success, 1 infeasible or failed check, 2 usage or input error,
3 search limits exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (
    INFEASIBLE, LIMIT_EXCEEDED, Solution, UKBWError, check_solution, weight_span,
)
from .degeneracy import InvalidSolutionError, find_degeneracy
from .generate import RANDOM, SPAN_HIT, GeneratorSpec, generate_instance
from .io import parse_instance, parse_solution, serialize_instance, serialize_solution
from .oracle import EnumerationCap, EnumerationCapError, oracle_optimum, weight_by_bisection
from .stage1 import SearchBoxTooLargeError, SearchLimits, stage1_feasible
from .stage2 import LINEAR, Stage2Objective, sigma, solve_two_stage

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as f:
            return f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")


def _emit(data: bytes, out: str | None) -> None:
    if out:
        with open(out, "wb") as f:
            f.write(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
        sys.stdout.flush()


def _report(obj) -> bytes:
    return (json.dumps(obj, indent=2) + "\n").encode("utf-8")


def _status_code(status: str) -> int:
    return {INFEASIBLE: EXIT_FAIL, LIMIT_EXCEEDED: EXIT_LIMIT}.get(status, EXIT_OK)


def cmd_solve(args) -> int:
    instance = parse_instance(_read(args.instance))
    if args.objective == LINEAR:
        if args.coeffs is None:
            raise UsageError("--objective linear requires --coeffs")
        if len(args.coeffs) != instance.n:
            raise UsageError(f"--coeffs needs {instance.n} numbers, got {len(args.coeffs)}")
        objective = Stage2Objective.linear(args.coeffs)
    else:
        objective = Stage2Objective()
    limits = SearchLimits(max_nodes=args.max_nodes, time_budget_ms=args.time_budget_ms)
    sol = solve_two_stage(instance, objective, limits)
    if sol.configuration is not None:
        cert = find_degeneracy(instance, sol)
        sol = Solution(sol.status, sol.configuration, sol.weights, sol.objective,
                       sol.sigma, cert is not None)
    _emit(serialize_solution(sol), args.output)
    return _status_code(sol.status)


def cmd_oracle(args) -> int:
    instance = parse_instance(_read(args.instance))
    res = oracle_optimum(instance, EnumerationCap(args.cap))
    if res.configuration is None:
        sol = Solution(res.status)
    else:
        w = weight_by_bisection(instance, res.configuration)
        sol = Solution(res.status, res.configuration, w, res.objective)
    _emit(serialize_solution(sol), args.output)
    return _status_code(sol.status)


def cmd_check(args) -> int:
    instance = parse_instance(_read(args.instance))
    solution = parse_solution(_read(args.solution))
    report = check_solution(instance, solution)
    _emit(_report({"ok": report.ok, "violations": list(report.violations)}), None)
    for v in report.violations:
        print(f"violation: {v}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_degeneracy(args) -> int:
    instance = parse_instance(_read(args.instance))
    solution = parse_solution(_read(args.solution))
    try:
        cert = find_degeneracy(instance, solution)
    except InvalidSolutionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    doc = {"degenerate": cert is not None, "certificate": None}
    if cert is not None:
        doc["certificate"] = {"i": cert.i, "j": cert.j,
                              "gamma": cert.gamma, "delta_max": cert.delta_max}
    _emit(_report(doc), None)
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GeneratorSpec(
        n=args.n, seed=args.seed, target_mode=args.mode,
        value_range=tuple(args.value_range), wmin_range=tuple(args.wmin_range),
        span_factor_range=tuple(args.span_factor_range),
        count_range=tuple(args.count_range))
    _emit(serialize_instance(generate_instance(spec)), args.output)
    return EXIT_OK


def cmd_span(args) -> int:
    instance = parse_instance(_read(args.instance))
    if len(args.counts) != instance.n:
        raise UsageError(f"--counts needs {instance.n} integers, got {len(args.counts)}")
    if any(c < 0 for c in args.counts):
        raise UsageError("--counts must be nonnegative")
    low, high = weight_span(instance, args.counts)
    feasible = stage1_feasible(instance, args.counts)
    doc = {"low": low, "high": high, "feasible": feasible}
    if feasible:
        doc["sigma"] = sigma(instance, args.counts)
    _emit(_report(doc), None)
    return EXIT_OK if feasible else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ukbw",
        description="Strict unbounded knapsack with bounded weights: two-stage solver.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve an instance")
    s.add_argument("instance")
    s.add_argument("--objective", choices=["constant", "linear"], default="constant")
    s.add_argument("--coeffs", type=float, nargs="+")
    s.add_argument("--max-nodes", type=int, default=SearchLimits.max_nodes)
    s.add_argument("--time-budget-ms", type=int, default=None)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("oracle", help="solve by exhaustive enumeration")
    s.add_argument("instance")
    s.add_argument("--cap", type=int, default=EnumerationCap.max_points)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("check", help="verify a solution file")
    s.add_argument("instance")
    s.add_argument("solution")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("degeneracy", help="look for non-unique optimal weights")
    s.add_argument("instance")
    s.add_argument("solution")
    s.set_defaults(func=cmd_degeneracy)

    s = sub.add_parser("gen", help="generate a seeded random instance")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--mode", choices=[SPAN_HIT, RANDOM], default=SPAN_HIT)
    s.add_argument("--value-range", type=float, nargs=2, default=GeneratorSpec.value_range)
    s.add_argument("--wmin-range", type=float, nargs=2, default=GeneratorSpec.wmin_range)
    s.add_argument("--span-factor-range", type=float, nargs=2,
                   default=GeneratorSpec.span_factor_range)
    s.add_argument("--count-range", type=int, nargs=2, default=GeneratorSpec.count_range)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("span", help="weight span of a configuration")
    s.add_argument("instance")
    s.add_argument("--counts", type=int, nargs="+", required=True)
    s.set_defaults(func=cmd_span)
    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (SearchBoxTooLargeError, EnumerationCapError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, UKBWError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
