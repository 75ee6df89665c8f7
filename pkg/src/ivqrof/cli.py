"""Command-line front end.

Three subcommands:

  evaluate         run the pipeline on one problem file and print the report
  sweep            one row per (q, family, weight method): scores, ranking,
                   spread, concentration; the data behind the comparison
                   figures
  compare-weights  the three weight vectors side by side with rankings and
                   concentration

PROBLEM is a problem-file path or a bundled name ("case",
"case-consistent"); it defaults to "case".  Exit codes: 0 success, 1 usage or
input error, 2 pipeline failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from . import data as bundled_data
from .core import InvalidValueError, NoValidRungError
from .magdm import (
    DecisionProblem,
    PipelineConfig,
    PipelineError,
    aggregate_attributes,
    aggregate_experts,
    derive_weights,
    evaluate,
    ingest,
    min_valid_q,
    rank,
)
from .operators import (
    Algebraic,
    FamilyParameterError,
    Frank,
    Hamacher,
    Weber,
    WeightError,
)
from .problemfile import ProblemFileError, load_problem
from .weights import SwingConfig, hhi, score_spread
from . import reporting


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); usage errors are exit 1
        raise UsageError(message)


def parse_family(spec: str, lam: float):
    spec = spec.strip().lower()
    if spec == "weber":
        return Weber(lam)
    if spec == "algebraic":
        return Algebraic()
    if spec.startswith("frank:"):
        return Frank(float(spec.split(":", 1)[1]))
    if spec == "frank":
        return Frank()
    if spec.startswith("hamacher:"):
        return Hamacher(float(spec.split(":", 1)[1]))
    if spec == "hamacher":
        return Hamacher()
    raise UsageError(f"unknown family {spec!r} "
                     "(weber|algebraic|frank:<alpha>|hamacher:<gamma>)")


def parse_weight_method(spec: str):
    spec = spec.strip()
    if spec.startswith("manual:"):
        try:
            values = tuple(float(v) for v in spec.split(":", 1)[1].split(","))
        except ValueError:
            raise UsageError(f"manual weights must be comma-separated numbers, "
                             f"got {spec!r}") from None
        return "manual", values
    if spec in ("swing", "mabac", "projection"):
        return spec, None
    raise UsageError(f"unknown weight method {spec!r} "
                     "(swing|mabac|projection|manual:<csv>)")


def resolve_problem(token: str) -> Path:
    try:
        return bundled_data.bundled_path(token)
    except KeyError:
        return Path(token)


def add_common(p: _Parser):
    p.add_argument("problem", nargs="?", default="case",
                   help="problem file path or bundled name (default: case)")
    p.add_argument("--q", default="auto",
                   help="rung: positive integer or 'auto' (default)")
    p.add_argument("--lambda", dest="lam", type=float, default=2.0,
                   help="Weber family parameter (default 2)")
    p.add_argument("--family", default="weber",
                   help="weber|algebraic|frank:<alpha>|hamacher:<gamma>")
    p.add_argument("--weights", default="swing",
                   help="swing|mabac|projection|manual:<csv>")
    p.add_argument("--d-bound", type=float, default=SwingConfig.d_bound,
                   help="swing selection threshold")
    p.add_argument("--alpha", type=float, default=SwingConfig.alpha,
                   help="swing smoothing factor")
    p.add_argument("--invert-selection", action="store_true",
                   help="swing: connect when closer than the threshold")
    p.add_argument("--mabac-literal", action="store_true",
                   help="MABAC: unshifted weighted values (zeros floored)")
    p.add_argument("--emit-csv", metavar="PATH", help="write CSV output")
    p.add_argument("--emit-json", metavar="PATH", help="write JSON output")


def build_config(args, weight_method=None) -> PipelineConfig:
    if args.q == "auto":
        q = "auto"
    else:
        try:
            q = int(args.q)
        except ValueError:
            raise UsageError(f"--q must be an integer or 'auto', got {args.q!r}")
        if q < 1:
            raise UsageError(f"--q must be >= 1, got {q}")
    family = parse_family(args.family, args.lam)
    method, manual = parse_weight_method(weight_method or args.weights)
    return PipelineConfig(
        q=q,
        family=family,
        weight_method=method,
        manual_weights=manual,
        swing=SwingConfig(d_bound=args.d_bound, alpha=args.alpha,
                          invert_selection=args.invert_selection),
        mabac_literal=args.mabac_literal,
    )


def _check_manual_weights(config: PipelineConfig, problem: DecisionProblem):
    if config.weight_method == "manual":
        n = len(problem.attributes)
        if len(config.manual_weights) != n:
            raise UsageError(
                f"--weights manual: expected {n} attribute weights, "
                f"got {len(config.manual_weights)}")


def cmd_evaluate(args) -> int:
    problem = load_problem(resolve_problem(args.problem))
    config = build_config(args)
    _check_manual_weights(config, problem)
    report = evaluate(problem, config)
    sys.stdout.write(reporting.report_text(report))
    if args.emit_json:
        reporting.write_json(Path(args.emit_json), report.to_dict())
    if args.emit_csv:
        header, rows = reporting.report_csv_rows(report)
        reporting.write_csv(Path(args.emit_csv), header, rows)
    return 0


def _parse_int_list(text: str, what: str) -> List[int]:
    try:
        out = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}")
    if not out:
        raise UsageError(f"{what} is empty")
    return out


def _sweep_rows(problem: DecisionProblem, args) -> List[dict]:
    qs = _parse_int_list(args.q_list, "--q-list")
    if any(q < 1 for q in qs):
        raise UsageError("--q-list entries must be >= 1")
    lambdas = [float(v) for v in args.lambda_list.split(",") if v.strip()]
    families = []
    for lam in lambdas:
        for spec in args.families.split(","):
            fam = parse_family(spec, lam)
            if fam not in families:
                families.append(fam)
    methods = [m.strip() for m in args.weight_methods.split(",") if m.strip()]

    normalized, _ = ingest(problem)
    base_cells = [c for mat in normalized.judgments for row in mat for c in row]
    base_q = float(min_valid_q(base_cells)) if args.q == "auto" else float(int(args.q))

    # weights are derived once, from the base-rung aggregation under the
    # first family, then held fixed across the sweep so that rows differ
    # only in the aggregation being compared
    base_family = families[0]
    R_base = aggregate_experts(normalized, base_q, base_family)
    weight_vectors = {}
    for mspec in methods:
        cfg = build_config(args, weight_method=mspec)
        _check_manual_weights(cfg, problem)
        w, _params = derive_weights(R_base, base_q, cfg)
        weight_vectors[mspec] = w

    rows = []
    for fam in families:
        for q in qs:
            R = aggregate_experts(normalized, float(q), fam)
            for mspec in methods:
                w = weight_vectors[mspec]
                aggs = aggregate_attributes(R, w, float(q), fam)
                ranked, _ties = rank(aggs, float(q), normalized.alternatives)
                ns = [r.norm_score for r in sorted(ranked, key=lambda r: r.index)]
                rows.append({
                    "q": q,
                    "family": fam.label(),
                    "weight_method": mspec,
                    "scores": ns,
                    "ranking": " > ".join(r.label for r in ranked),
                    "spread": score_spread(ns),
                    "hhi": hhi(ns),
                })
    return rows


def cmd_sweep(args) -> int:
    problem = load_problem(resolve_problem(args.problem))
    rows = _sweep_rows(problem, args)
    sys.stdout.write(reporting.sweep_text(problem.alternatives, rows))
    if args.emit_csv:
        reporting.sweep_csv(Path(args.emit_csv), problem.alternatives, rows)
    if args.emit_json:
        reporting.write_json(Path(args.emit_json), {"rows": rows})
    if args.plot_dir:
        written = reporting.render_sweep_figures(
            Path(args.plot_dir), problem.alternatives, rows)
        for p in written:
            sys.stdout.write(f"figure: {p}\n")
    return 0


def cmd_compare_weights(args) -> int:
    problem = load_problem(resolve_problem(args.problem))
    normalized, _ = ingest(problem)
    cells = [c for mat in normalized.judgments for row in mat for c in row]
    q = float(min_valid_q(cells)) if args.q == "auto" else float(int(args.q))
    family = parse_family(args.family, args.lam)
    R = aggregate_experts(normalized, q, family)

    entries = []
    for mspec in ("swing", "mabac", "projection"):
        cfg = build_config(args, weight_method=mspec)
        w, params = derive_weights(R, q, cfg)
        aggs = aggregate_attributes(R, w, q, family)
        ranked, _ties = rank(aggs, q, normalized.alternatives)
        ns = [r.norm_score for r in sorted(ranked, key=lambda r: r.index)]
        entries.append({
            "method": mspec,
            "weights": w,
            "params": params,
            "ranking": " > ".join(r.label for r in ranked),
            "hhi": hhi(ns),
        })
    sys.stdout.write(f"rung q = {q:g}   family = {family.label()}\n")
    sys.stdout.write(reporting.compare_weights_text(problem.attributes, entries))
    if args.emit_csv:
        reporting.compare_weights_csv(Path(args.emit_csv), problem.attributes, entries)
    if args.emit_json:
        reporting.write_json(Path(args.emit_json), {"q": q, "entries": entries})
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="ivqrof",
                     description="Interval-valued q-rung orthopair fuzzy "
                                 "group decision analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("evaluate", help="run the decision pipeline")
    add_common(p_eval)
    p_eval.set_defaults(func=cmd_evaluate)

    p_sweep = sub.add_parser("sweep", help="parameter sweep over q and families")
    add_common(p_sweep)
    p_sweep.add_argument("--q-list", default="2,3,4,5,6,7,8,9",
                         help="comma-separated rungs (default 2..9)")
    p_sweep.add_argument("--lambda-list", default="2",
                         help="comma-separated Weber parameters (default 2)")
    p_sweep.add_argument("--families", default="weber,algebraic,frank:2,hamacher:2",
                         help="comma-separated family specs")
    p_sweep.add_argument("--weight-methods", default="swing,mabac,projection",
                         help="comma-separated weight methods")
    p_sweep.add_argument("--plot-dir", metavar="DIR",
                         help="render figures (PNG) into DIR")
    p_sweep.set_defaults(func=cmd_sweep)

    p_cmp = sub.add_parser("compare-weights",
                           help="derive weights by all three methods")
    add_common(p_cmp)
    p_cmp.set_defaults(func=cmd_compare_weights)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (ProblemFileError, WeightError, FamilyParameterError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (PipelineError, InvalidValueError, NoValidRungError) as exc:
        sys.stderr.write(f"pipeline error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
