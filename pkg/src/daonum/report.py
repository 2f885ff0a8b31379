"""Full Dao-number reports: assembly, JSON and text rendering."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass

from .betti import QQ, FieldConfig
from .bounds import ci_dao_closed_form
from .dao import (
    DaoReport,
    certified_bound,
    d2_randomized,
    d3_exact,
    generation_lower_bound_check,
    verify_d1,
)
from .errors import BudgetExceededError, CapExceededError
from .ideal import MonomialIdeal, require_proper, structure_report
from .io import ideal_to_json
from .orders import DEFAULT_EXHAUSTIVE_CAP

SCHEMA = "daonum.report/1"


@dataclass(frozen=True)
class ReportConfig:
    trials: int = 3
    seed: int = 0
    field: FieldConfig = QQ
    order_strategy: str = "auto"
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP
    use_reg: bool = True
    verify_d1: bool = False
    lower_bound_check: bool = True


def run_report(I: MonomialIdeal, config: ReportConfig = ReportConfig()) -> DaoReport:
    """Compute everything for I; stages that hit a cap or the time budget are
    listed in ``report.incomplete`` and the rest of the report is kept."""
    require_proper(I, "Dao report")
    rep = DaoReport(trials=config.trials, seed=config.seed, field=str(config.field))

    def stage(name, fn):
        t0 = time.perf_counter()
        try:
            return fn()
        except BudgetExceededError:
            rep.incomplete.append(f"{name}: time budget exceeded")
        except CapExceededError as exc:
            rep.incomplete.append(f"{name}: {exc}")
        finally:
            rep.timings[name] = round(time.perf_counter() - t0, 6)
        return None

    rep.bounds = stage("bounds", lambda: certified_bound(
        I, config.use_reg, config.field, config.order_strategy, config.exhaustive_cap))
    rep.ci_closed_form = ci_dao_closed_form(I)
    if rep.bounds is None:
        return rep
    res = stage("d3", lambda: d3_exact(I, rep.bounds.value))
    if res is None:
        return rep
    rep.d3, rep.dao_table = res
    rep.d1 = rep.d3
    d2 = stage("d2", lambda: d2_randomized(I, rep.d3, config.trials, config.seed, config.field))
    if d2 is not None:
        rep.d2, rep.d2_certified = d2.d2, d2.certified
    if config.lower_bound_check:
        rep.lower_bound = stage("lower_bound", lambda: generation_lower_bound_check(I, rep.d3, rep.bounds.value))
    if config.verify_d1:
        rep.d1_verified = stage("verify_d1", lambda: verify_d1(
            I, rep.d3, rep.bounds.value, config.trials, config.seed, config.field))
    return rep


def report_to_dict(I: MonomialIdeal, rep: DaoReport, timings: bool = False) -> dict:
    info = structure_report(I)
    out = {
        "schema": SCHEMA,
        "ideal": ideal_to_json(I),
        "structure": {
            "mu": info.mu,
            "alpha": info.alpha,
            "omega": info.omega,
            "bounding_multidegree": list(info.bounding_multidegree),
            "squarefree": info.squarefree,
            "complete_intersection": info.complete_intersection,
        },
        "d1": {"value": rep.d1, "status": "exact (equals d3)" if rep.d1 is not None else "incomplete",
               "verified": rep.d1_verified},
        "d3": {"value": rep.d3, "status": "exact" if rep.d3 is not None else "incomplete"},
        "d2": {"value": rep.d2, "certified": rep.d2_certified, "status": _d2_status(rep)},
        "bounds": rep.bounds.as_dict() if rep.bounds else None,
        "dao_module": None,
        "ci_closed_form": asdict(rep.ci_closed_form) if rep.ci_closed_form else None,
        "lower_bound_check": None,
        "provenance": {"trials": rep.trials, "seed": rep.seed, "field": rep.field},
        "incomplete": list(rep.incomplete),
    }
    if rep.dao_table is not None:
        out["dao_module"] = {
            "certified_bound": rep.dao_table.certified_bound,
            "rows": [{"k": r.k, "dim": r.dim, "basis": [list(v) for v in r.basis]} for r in rep.dao_table.rows],
        }
    if rep.lower_bound is not None:
        out["lower_bound_check"] = {
            "omega_surrogate": rep.lower_bound.omega_surrogate,
            "holds": rep.lower_bound.holds,
            "interpretive": True,
        }
    if timings:
        out["timings"] = dict(rep.timings)
    return out


def _d2_status(rep: DaoReport) -> str:
    if rep.d2 is None:
        return "incomplete"
    if rep.d2_certified:
        return "certified"
    return "probabilistic (upper bound certified)"


def dumps_report(I: MonomialIdeal, rep: DaoReport, timings: bool = False) -> str:
    return json.dumps(report_to_dict(I, rep, timings), indent=2, sort_keys=True)


def render_report(I: MonomialIdeal, rep: DaoReport) -> str:
    d = report_to_dict(I, rep, timings=True)
    s = d["structure"]
    lines = [
        f"ideal      {I}",
        f"ring       {' '.join(I.ring.var_names)}",
        f"mu={s['mu']} alpha={s['alpha']} omega={s['omega']} deg={tuple(s['bounding_multidegree'])}"
        f" squarefree={s['squarefree']} CI={s['complete_intersection']}",
        "",
        f"d1 = {_show(rep.d1)}   [{d['d1']['status']}]" + (
            f" (m-fullness re-check: {'agrees' if rep.d1_verified else 'DISAGREES'})" if rep.d1_verified is not None else ""),
        f"d2 = {_show(rep.d2)}   [{d['d2']['status']}]",
        f"d3 = {_show(rep.d3)}   [{d['d3']['status']}]",
    ]
    if rep.bounds:
        b = rep.bounds
        lq = "exhaustive" if b.lin_quot.exhaustive else "heuristic, still valid"
        lines += [
            "",
            "upper bounds",
            f"  linear quotients  {b.lin_quot.value}  ({lq})",
            f"  degree sum        {b.degree_sum}",
            f"  multidegree       {b.multidegree}",
            f"  reg - alpha       {_show(b.equigenerated_reg, 'n/a (not equigenerated)')}",
            f"  certified B       {b.value}",
        ]
    if rep.ci_closed_form:
        c = rep.ci_closed_form
        lines.append(f"complete intersection case ({c.case}): d1=d3={c.d3}, d2={_show(c.d2, 'unknown')}")
    if rep.dao_table is not None:
        lines += ["", "Dao module (I m^{k+1} : m) / I m^k"]
        if not rep.dao_table.rows:
            lines.append("  (B = 0, nothing to scan)")
        for r in rep.dao_table.rows:
            basis = ", ".join(I.ring.format(v) for v in r.basis[:8]) + (" ..." if len(r.basis) > 8 else "")
            lines.append(f"  k={r.k}: dim {r.dim}" + (f"  {{{basis}}}" if r.dim else ""))
    if rep.lower_bound is not None:
        lines.append(f"generation lower bound (interpretive): omega-1 = {rep.lower_bound.omega_surrogate - 1}"
                     f" <= d3: {rep.lower_bound.holds}")
    lines += ["", f"provenance: field {rep.field}, seed {rep.seed}, trials {rep.trials}"]
    lines.append("timings: " + ", ".join(f"{k} {v:.3f}s" for k, v in rep.timings.items()))
    if rep.incomplete:
        lines += ["INCOMPLETE:"] + [f"  {m}" for m in rep.incomplete]
    return "\n".join(lines)


def _show(v, default="?"):
    return default if v is None else str(v)
