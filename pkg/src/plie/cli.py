"""Command-line entry point: run a verification suite on a scenario."""
from __future__ import annotations

import argparse
import sys
import warnings
from dataclasses import replace

from .errors import PlieError, RankUnstable
from .numerics import DEFAULT_TOL
from .scenarios import SHIPPED, load_scenario
from .suites import SUITES, render_json, render_text, run_suite


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plie",
        description="Numerically verified Poisson-Lie identities on matrix groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite on a scenario")
    v.add_argument("scenario",
                   help="shipped scenario name (%s) or a path to a scenario "
                        "JSON file" % ", ".join(sorted(SHIPPED)))
    v.add_argument("--suite", required=True, choices=sorted(SUITES),
                   help="which suite to run")
    v.add_argument("--seed", type=int, default=None,
                   help="override the scenario's sampling seed")
    v.add_argument("--format", choices=("json", "text"), default="json",
                   help="report format (default: json)")
    v.add_argument("--out", default=None,
                   help="write the report to this path instead of stdout")
    v.add_argument("--fd-step", type=float, default=None,
                   help="override the finite-difference step")
    v.add_argument("--strict", action="store_true",
                   help="treat rank-stability warnings as errors")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.strict:
        warnings.simplefilter("error", RankUnstable)
    cfg = DEFAULT_TOL
    if args.fd_step is not None:
        cfg = replace(cfg, fd_step=args.fd_step)
    try:
        scenario = load_scenario(args.scenario, tol=cfg)
        report = run_suite(scenario, args.suite, seed=args.seed, cfg=cfg)
    except (PlieError, RankUnstable) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    text = render_json(report) if args.format == "json" else render_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["all_pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
