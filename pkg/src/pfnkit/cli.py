"""Command-line front end: rank, sweep, check-closure, demo.

Exit codes: 0 success, 2 validation or usage errors (one-line diagnostic on
stderr), 1 internal inconsistency (a closure violation in this library's
own operators, which would be a bug rather than user error).
"""

from __future__ import annotations

import argparse
import sys

from . import io as pio
from .errors import InternalConsistencyError, PfnError
from .legacy import fuzz_reports, paper_example_reports, registered_operators
from .mcdm import Criterion, rank_problem, sweep_gamma
from .tnorms import FAMILY_NAMES, TnormFamily


def _add_problem_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="problem file (.json or .csv)")
    parser.add_argument(
        "--tnorm", required=True, choices=FAMILY_NAMES, help="t-norm family"
    )
    parser.add_argument(
        "--gamma", type=float, default=None, help="family parameter where required"
    )
    parser.add_argument(
        "--op",
        required=True,
        choices=("pfiwa", "pfiwg", "pfiowa", "pfiowg"),
        help="aggregation operator",
    )
    parser.add_argument(
        "--criteria-json",
        default=None,
        help="sidecar JSON with criteria kinds/weights (CSV input only)",
    )
    parser.add_argument(
        "--weights",
        default=None,
        help="comma-separated criterion weights (CSV input only)",
    )
    parser.add_argument(
        "--kinds",
        default=None,
        help="comma-separated benefit/cost kinds (CSV input only)",
    )


def _criteria_from_flags(args) -> list[Criterion] | None:
    if args.weights is None and args.kinds is None:
        return None
    if args.weights is None or args.kinds is None:
        raise PfnError("--weights and --kinds must be given together")
    try:
        weights = [float(v) for v in args.weights.split(",")]
    except ValueError:
        raise PfnError(f"--weights must be comma-separated numbers: {args.weights!r}")
    kinds = [k.strip() for k in args.kinds.split(",")]
    if len(weights) != len(kinds):
        raise PfnError(
            f"--weights has {len(weights)} entries but --kinds has {len(kinds)}"
        )
    return [
        Criterion(f"G{i + 1}", kind, w)
        for i, (kind, w) in enumerate(zip(kinds, weights))
    ]


def _load(args):
    return pio.load_problem(
        args.input,
        criteria=_criteria_from_flags(args),
        sidecar=args.criteria_json,
    )


def cmd_rank(args) -> int:
    problem = _load(args)
    family = TnormFamily(args.tnorm, args.gamma)
    result = rank_problem(problem, family, args.op)
    if args.format == "json":
        sys.stdout.write(pio.ranking_to_json(result))
    else:
        sys.stdout.write(pio.ranking_to_csv(result))
    return 0


def cmd_sweep(args) -> int:
    problem = _load(args)
    TnormFamily(args.tnorm, args.gamma_min)  # validate endpoints up front
    TnormFamily(args.tnorm, args.gamma_max)
    table = sweep_gamma(
        problem, args.tnorm, args.op, args.gamma_min, args.gamma_max, args.steps
    )
    sys.stdout.write(pio.sweep_to_csv(table))
    if args.plot:
        from .plots import render_sweep

        render_sweep(table, args.plot)
        print(f"wrote figure to {args.plot}", file=sys.stderr)
    return 0


def cmd_check_closure(args) -> int:
    if args.paper_examples:
        reports = paper_example_reports(args.operator)
    else:
        reports = fuzz_reports(args.operator, args.samples, args.seed)
    sys.stdout.write(pio.closure_reports_to_csv(reports))
    if args.operator.startswith("interactional-"):
        bad = sum(1 for r in reports if not r.is_pfn)
        if bad:
            raise InternalConsistencyError(
                f"{bad} closure violations in {args.operator}"
            )
    return 0


def cmd_demo(args) -> int:
    problem = pio.load_case_study()
    family = TnormFamily("product")
    result = rank_problem(problem, family, "pfiwa")
    sys.stdout.write(pio.demo_report(result, problem))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfnkit",
        description="Picture fuzzy MCDM ranking, sensitivity sweeps, and "
        "closure auditing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="rank alternatives from a problem file")
    _add_problem_args(p_rank)
    p_rank.add_argument("--format", choices=("csv", "json"), default="csv")
    p_rank.set_defaults(func=cmd_rank)

    p_sweep = sub.add_parser("sweep", help="score sweep over a gamma grid")
    _add_problem_args(p_sweep)
    p_sweep.add_argument("--gamma-min", type=float, required=True)
    p_sweep.add_argument("--gamma-max", type=float, required=True)
    p_sweep.add_argument("--steps", type=int, required=True)
    p_sweep.add_argument(
        "--plot", default=None, metavar="PATH", help="also render a PNG figure"
    )
    p_sweep.set_defaults(func=cmd_sweep)

    p_check = sub.add_parser(
        "check-closure", help="audit an operator's outputs for PFN membership"
    )
    p_check.add_argument(
        "--operator",
        required=True,
        help="operator id; one of: " + ", ".join(registered_operators()),
    )
    group = p_check.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--paper-examples",
        action="store_true",
        help="run the bundled counterexample fixtures",
    )
    group.add_argument("--samples", type=int, default=None, help="fuzz sample count")
    p_check.add_argument("--seed", type=int, default=0, help="fuzz seed")
    p_check.set_defaults(func=cmd_check_closure)

    p_demo = sub.add_parser("demo", help="walk through the bundled case study")
    p_demo.set_defaults(func=cmd_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PfnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
