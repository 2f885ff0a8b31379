"""Command line interface: ``daonum <verb> [options] [file]``.

Exit codes: 0 success, 1 input error, 2 cap or time budget exceeded,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .audit import ALL_CHECKS, MODES, AuditConfig, random_audit
from .betti import FieldConfig, is_componentwise_linear, multigraded_betti, regularity
from .bounds import all_bounds
from .dao import certified_bound, dao_module_component
from .errors import BudgetExceededError, CapExceededError, DaoError
from .ideal import require_proper, structure_report
from .io import ideal_to_json, parse_ideal
from .limits import limits
from .orders import find_linear_quotient_order, lambda_profile
from .report import ReportConfig, dumps_report, render_report, run_report
from .verify import render_rows, rows_to_json, verify_paper

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3
LQ_EXHAUSTIVE_CAP = 16


def _global_flags(parser, suppress: bool):
    # defaults live on the top-level parser only, so flags work before or after the verb
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for every random choice (default 0)")
    parser.add_argument("--trials", type=int, default=d(3), help="linear forms tried per fullness test (default 3)")
    parser.add_argument("--field", default=d("q"), help="q (rationals, default) or p:<prime>")
    parser.add_argument("--max-enum", type=int, default=d(None), help="enumeration cap")
    parser.add_argument("--time-budget", type=float, default=d(None),
                        help="wall-clock budget in seconds (fallback: DAONUM_TIME_BUDGET)")
    parser.add_argument("--order-strategy", choices=("exhaustive", "heuristic", "auto"), default=d("auto"),
                        help="generator-order search for the linear-quotient bound (default auto)")
    parser.add_argument("--format", choices=("auto", "text", "json"), default=d("auto"),
                        help="input format (default: detect)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="daonum", description="Dao numbers of monomial ideals.")
    parser.add_argument("--version", action="version", version=f"daonum {__version__}")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def verb(name, help_text, takes_input=True):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if takes_input:
            p.add_argument("file", nargs="?", default="-", help="ideal document (default: stdin)")
        return p

    verb("info", "structure of the ideal")
    p = verb("dao", "Dao numbers with bounds and certification status")
    p.add_argument("--verify-d1", action="store_true", help="re-derive d1 from m-fullness tests")
    p.add_argument("--no-reg", action="store_true", help="skip the regularity bound")
    p.add_argument("--timings", action="store_true", help="include timings in JSON output")
    p = verb("dao-module", "components (I m^{k+1} : m) / I m^k")
    p.add_argument("--upto", type=int, default=None, help="last k to list (default: certified bound)")
    verb("bounds", "upper bounds for d3")
    p = verb("betti", "Betti table of the ideal")
    p.add_argument("--multigraded", action="store_true", help="list every nonzero beta_{i,a}")
    verb("reg", "Castelnuovo-Mumford regularity")
    p = verb("is-cwl", "componentwise linearity")
    p.add_argument("--full-range", action="store_true", help="also check the component in degree omega + 1")
    verb("lin-quot", "search for an order with linear quotients")
    p = verb("verify-paper", "golden suite of known values", takes_input=False)
    p.add_argument("--corrupt", action="store_true", help="perturb one expected value (harness self-test)")
    p = verb("random-audit", "seeded random audit of the invariants", takes_input=False)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--exp-cap", type=int, default=3)
    p.add_argument("--gens-min", type=int, default=1)
    p.add_argument("--gens-max", type=int, default=6)
    p.add_argument("--mode", choices=MODES, default="general")
    p.add_argument("--checks", default=",".join(ALL_CHECKS), help="comma-separated subset of checks")
    return parser


def _read_ideal(args):
    if args.file == "-":
        data = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            data = fh.read()
    I = parse_ideal(data, args.format).ideal()
    require_proper(I, args.verb)
    return I


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_info(args, field):
    I = _read_ideal(args)
    s = structure_report(I)
    payload = {"ideal": ideal_to_json(I), "mu": s.mu, "alpha": s.alpha, "omega": s.omega,
               "bounding_multidegree": list(s.bounding_multidegree), "degree_excess": s.degree_excess,
               "squarefree": s.squarefree, "support": list(s.support),
               "complete_intersection": s.complete_intersection, "equigenerated": s.equigenerated}
    text = "\n".join([f"ideal   {I}", f"mu={s.mu} alpha={s.alpha} omega={s.omega}",
                      f"deg(I)={s.bounding_multidegree} |deg(I)|-n={s.degree_excess}",
                      f"squarefree={s.squarefree} complete_intersection={s.complete_intersection} "
                      f"equigenerated={s.equigenerated}"])
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_dao(args, field):
    I = _read_ideal(args)
    config = ReportConfig(trials=args.trials, seed=args.seed, field=field, order_strategy=args.order_strategy,
                          use_reg=not args.no_reg, verify_d1=args.verify_d1)
    rep = run_report(I, config)
    if args.json:
        print(dumps_report(I, rep, timings=args.timings))
    else:
        print(render_report(I, rep))
    if rep.incomplete:
        return EXIT_CAP
    if rep.d1_verified is False:
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_dao_module(args, field):
    I = _read_ideal(args)
    upto = args.upto
    if upto is None:
        upto = certified_bound(I, field=field, strategy=args.order_strategy).value
    rows = [dao_module_component(I, k) for k in range(upto + 1)]
    payload = {"ideal": ideal_to_json(I),
               "rows": [{"k": r.k, "dim": r.dim, "basis": [list(v) for v in r.basis]} for r in rows]}
    text = "\n".join(f"k={r.k}: dim {r.dim}" + (" {" + ", ".join(I.ring.format(v) for v in r.basis) + "}"
                                                 if r.dim else "") for r in rows)
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_bounds(args, field):
    I = _read_ideal(args)
    b = all_bounds(I, field=field, strategy=args.order_strategy)
    payload = b.as_dict()
    payload["lin_quot_order"] = [list(u) for u in b.lin_quot.order]
    text = "\n".join([
        f"linear quotients  {b.lin_quot.value}  ({'exhaustive' if b.lin_quot.exhaustive else 'heuristic'})",
        f"  order           {' < '.join(I.ring.format(u) for u in b.lin_quot.order)}",
        f"degree sum        {b.degree_sum}",
        f"multidegree       {b.multidegree}",
        f"reg - alpha       {'n/a' if b.equigenerated_reg is None else b.equigenerated_reg}",
        f"certified B       {b.value}",
    ])
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_betti(args, field):
    I = _read_ideal(args)
    table = multigraded_betti(I, field)
    coarse = table.coarse()
    payload = {"field": str(field), "coarse": [{"i": i, "j": j, "dim": v} for (i, j), v in sorted(coarse.items())]}
    text = table.format()
    if args.multigraded:
        entries = sorted(table.entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))
        payload["multigraded"] = [{"i": i, "a": list(a), "dim": v} for (i, a), v in entries]
        text += "\n" + "\n".join(f"beta_{i},{I.ring.format(a)} = {v}" for (i, a), v in entries)
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_reg(args, field):
    I = _read_ideal(args)
    r = regularity(I, field)
    i, a = r.witness
    payload = {"reg": r.reg, "alpha": r.alpha, "omega": r.omega, "linear_resolution": r.is_linear,
               "witness": {"i": i, "a": list(a)}, "field": str(field)}
    text = (f"reg(I) = {r.reg}  (attained by beta_{i},{I.ring.format(a)})\n"
            f"linear resolution: {r.is_linear}")
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_is_cwl(args, field):
    I = _read_ideal(args)
    ok = is_componentwise_linear(I, field, full_range=args.full_range)
    top = I.omega + (1 if args.full_range else 0)
    _emit(args, {"componentwise_linear": ok, "degrees_checked": [I.alpha, top]},
          f"componentwise linear: {ok}  (components in degrees {I.alpha}..{top})")
    return EXIT_OK


def _cmd_lin_quot(args, field):
    I = _read_ideal(args)
    strategy = args.order_strategy
    if strategy == "auto":
        strategy = "exhaustive" if I.mu <= LQ_EXHAUSTIVE_CAP else "heuristic"
    strategy = "greedy" if strategy == "heuristic" else "exhaustive"
    order = find_linear_quotient_order(I, strategy, LQ_EXHAUSTIVE_CAP)
    payload = {"linear_quotients": order is not None, "strategy": strategy,
               "order": None if order is None else [list(u) for u in order]}
    if order is None:
        verdict = "none exists" if strategy == "exhaustive" else "none found (greedy search is not decisive)"
        text = f"linear quotients: {verdict}"
    else:
        prof = lambda_profile(I, order)
        text = "linear quotients: " + " < ".join(I.ring.format(u) for u in order) + f"\nlambda profile {prof.values}"
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_verify_paper(args, field):
    rows = verify_paper(args.trials, args.seed, field, corrupt=args.corrupt)
    _emit(args, {"rows": rows_to_json(rows), "passed": all(r.passed for r in rows)}, render_rows(rows))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_MISMATCH


def _cmd_random_audit(args, field):
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    config = AuditConfig(n_range=(args.n_min, args.n_max), exp_cap=args.exp_cap,
                         gens_range=(args.gens_min, args.gens_max), samples=args.samples, seed=args.seed,
                         field=field, trials=args.trials, mode=args.mode, checks=checks,
                         max_enum=args.max_enum or AuditConfig.max_enum, time_budget=args.time_budget)
    summary = random_audit(config)
    _emit(args, summary.as_dict(), summary.render())
    if not summary.ok:
        return EXIT_MISMATCH
    return EXIT_CAP if summary.budget_exhausted else EXIT_OK


COMMANDS = {
    "info": _cmd_info,
    "dao": _cmd_dao,
    "dao-module": _cmd_dao_module,
    "bounds": _cmd_bounds,
    "betti": _cmd_betti,
    "reg": _cmd_reg,
    "is-cwl": _cmd_is_cwl,
    "lin-quot": _cmd_lin_quot,
    "verify-paper": _cmd_verify_paper,
    "random-audit": _cmd_random_audit,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.time_budget is None and os.environ.get("DAONUM_TIME_BUDGET"):
        try:
            args.time_budget = float(os.environ["DAONUM_TIME_BUDGET"])
        except ValueError:
            print("daonum: error: DAONUM_TIME_BUDGET must be a number of seconds", file=sys.stderr)
            return EXIT_INPUT
    try:
        field = FieldConfig.parse(args.field)
    except ValueError as exc:
        print(f"daonum: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.trials < 1:
        print("daonum: error: --trials must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        with limits(max_enum=args.max_enum, time_budget=args.time_budget):
            return COMMANDS[args.verb](args, field)
    except BudgetExceededError:
        print("daonum: time budget exceeded", file=sys.stderr)
        return EXIT_CAP
    except CapExceededError as exc:
        print(f"daonum: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DaoError, ValueError, OSError) as exc:
        print(f"daonum: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
