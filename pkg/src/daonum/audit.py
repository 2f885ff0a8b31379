"""Seeded random audit of the invariants the engine relies on."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .betti import QQ, FieldConfig, is_componentwise_linear, koszul_betti_oracle, multigraded_betti
from .bounds import all_bounds, ci_dao_closed_form
from .dao import (
    d2_randomized,
    d3_exact,
    dao_module_component,
    generation_lower_bound_check,
    is_full_randomized,
    is_m_full_randomized,
    is_weakly_m_full,
)
from .errors import BudgetExceededError
from .ideal import (
    MonomialIdeal,
    Ring,
    colon_monomial,
    colon_variable_rees,
    component_ideal,
    maximal_ideal,
    multiply_by_m_power,
)
from .io import ideal_to_json
from .limits import limits
from .orders import (
    DEFAULT_EXHAUSTIVE_CAP,
    GeneratorOrder,
    heuristic_orders,
    degree_lex_order,
    find_linear_quotient_order,
    lambda_profile,
    lift_order,
    lifted_parents,
    min_max_lambda,
)

MODES = ("general", "ci", "squarefree")

ALL_CHECKS = (
    "bounds",
    "dao_module",
    "rees_colon",
    "lir",
    "lambda_decay",
    "lambda_lift_lq",
    "lower_bound",
    "squarefree",
    "ci",
    "lq_fullness",
    "betti_oracle",
    "order_search",
    "degree_sum_dominance",
    "d2_le_d3",
)

# the invariants of the bound-chain audit
BOUND_CHAIN_CHECKS = ("bounds", "lambda_decay", "rees_colon", "lir")


@dataclass(frozen=True)
class AuditConfig:
    """Sample space and budget of a random audit.

    Parameters
    ----------
    n_range : (lo, hi)
        Number of variables, inclusive.
    exp_cap : int
        Largest exponent of any variable in a sampled generator.
    gens_range : (lo, hi)
        Number of sampled generators before minimalization.
    """

    n_range: tuple = (1, 3)
    exp_cap: int = 3
    gens_range: tuple = (1, 6)
    samples: int = 200
    seed: int = 42
    field: FieldConfig = QQ
    trials: int = 3
    mode: str = "general"
    max_enum: int = 4_000_000
    time_budget: Optional[float] = None
    checks: tuple = ALL_CHECKS
    oracle_max_n: int = 3  # the Koszul oracle is only run up to this many variables

    def __post_init__(self):
        lo, hi = self.n_range
        if not 1 <= lo <= hi:
            raise ValueError("n_range must satisfy 1 <= lo <= hi")
        glo, ghi = self.gens_range
        if not 1 <= glo <= ghi:
            raise ValueError("gens_range must satisfy 1 <= lo <= hi")
        if self.exp_cap < 1 or self.samples < 1 or self.trials < 1 or self.max_enum < 1:
            raise ValueError("exp_cap, samples, trials and max_enum must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}")


def random_ideal(rng: random.Random, config: AuditConfig) -> MonomialIdeal:
    """One sample; zero and unit ideals are resampled."""
    while True:
        n = rng.randint(*config.n_range)
        ring = Ring.of(n)
        if config.mode == "ci":
            gens = _random_ci(rng, n, config.exp_cap)
        else:
            top = 1 if config.mode == "squarefree" else config.exp_cap
            count = rng.randint(*config.gens_range)
            gens = [tuple(rng.randint(0, top) for _ in range(n)) for _ in range(count)]
        gens = [g for g in gens if any(g)]
        if gens:
            return MonomialIdeal(ring, gens)


def _random_ci(rng: random.Random, n: int, exp_cap: int) -> list:
    """Generators on pairwise disjoint random blocks of variables."""
    variables = list(range(n))
    rng.shuffle(variables)
    used = rng.randint(1, n)
    gens = []
    pos = 0
    while pos < used:
        size = rng.randint(1, used - pos)
        g = [0] * n
        for t in variables[pos:pos + size]:
            g[t] = rng.randint(1, exp_cap)
        gens.append(tuple(g))
        pos += size
    return gens


@dataclass
class Violation:
    check: str
    ideal: dict
    detail: str


@dataclass
class AuditSummary:
    config: AuditConfig
    completed: int = 0
    counts: dict = dc_field(default_factory=dict)  # check -> number of instances evaluated
    violations: dict = dc_field(default_factory=dict)  # check -> number of failing instances
    first_counterexample: Optional[Violation] = None
    budget_exhausted: bool = False
    stats: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def as_dict(self) -> dict:
        c = self.config
        return {
            "config": {"n_range": list(c.n_range), "exp_cap": c.exp_cap, "gens_range": list(c.gens_range),
                       "samples": c.samples, "seed": c.seed, "field": str(c.field), "trials": c.trials,
                       "mode": c.mode, "checks": list(c.checks)},
            "completed": self.completed,
            "budget_exhausted": self.budget_exhausted,
            "counts": dict(sorted(self.counts.items())),
            "violations": dict(sorted(self.violations.items())),
            "first_counterexample": None if self.first_counterexample is None else {
                "check": self.first_counterexample.check,
                "ideal": self.first_counterexample.ideal,
                "detail": self.first_counterexample.detail,
            },
            "stats": dict(sorted(self.stats.items())),
        }

    def render(self) -> str:
        lines = [f"audit: {self.completed}/{self.config.samples} samples, mode {self.config.mode}, "
                 f"seed {self.config.seed}, field {self.config.field}"]
        if self.budget_exhausted:
            lines.append("time budget exhausted; summary covers completed samples only")
        for name in sorted(self.counts):
            bad = self.violations.get(name, 0)
            lines.append(f"  {'FAIL' if bad else 'ok':<5} {name:<22} {self.counts[name]:>5} checked  {bad} violations")
        for k, v in sorted(self.stats.items()):
            lines.append(f"  stat  {k:<22} {v}")
        if self.first_counterexample:
            v = self.first_counterexample
            lines += ["first counterexample:", f"  check  {v.check}", f"  ideal  {v.ideal}", f"  detail {v.detail}"]
        return "\n".join(lines)


# -- individual invariants ---------------------------------------------------
# each returns None when the invariant holds, else a description

def check_bounds(I, ctx):
    b, d3 = ctx["bounds"], ctx["d3"]
    named = {"lin_quot": b.lin_quot.value, "degree_sum": b.degree_sum, "multidegree": b.multidegree}
    if b.equigenerated_reg is not None:
        named["equigenerated_reg"] = b.equigenerated_reg
    bad = {k: v for k, v in named.items() if d3 > max(v, 0)}
    return f"d3={d3} exceeds {bad}" if bad else None


def check_dao_module(I, ctx):
    for k in range(ctx["bounds"].value + 1):
        dim = dao_module_component(I, k).dim
        if (dim == 0) != is_weakly_m_full(multiply_by_m_power(I, k)):
            return f"k={k}: component dim {dim} disagrees with weak m-fullness of I m^k"
    return None


def check_rees_colon(I, ctx, kmax=2):
    for k in range(kmax + 1):
        direct = multiply_by_m_power(I, k + 1)
        for t in range(I.ring.n):
            if colon_variable_rees(I, k, t) != colon_monomial(direct, tuple(int(i == t) for i in range(I.ring.n))):
                return f"closed form of (I m^{k + 1} : x_{t + 1}) differs from the direct colon"
    return None


def check_lir(I, ctx):
    m = maximal_ideal(I.ring)
    Im = multiply_by_m_power(I, 1)
    for j in range(I.alpha + 1, I.omega + 3):
        if component_ideal(Im, j) != component_ideal(I, j - 1) * m:
            return f"(I m)_<{j}> != I_<{j - 1}> m"
    return None


def _lift_chain(I, order, steps):
    """[(J, O, profile)] for I, I m, ..., I m^steps along the lifted orders."""
    chain = [(I, order, lambda_profile(I, order))]
    for _ in range(steps):
        J, O, _ = chain[-1]
        J1, O1 = lift_order(J, O)
        chain.append((J1, O1, lambda_profile(J1, O1)))
    return chain


def _audit_orders(I, ctx):
    return {degree_lex_order(I), ctx["best_order"]}


def check_lambda_decay(I, ctx, steps=2):
    """Each kept product x_j u_i has lambda strictly below that of u_i when
    the latter is positive, and no larger otherwise; u_i is the first parent
    in the lifted order."""
    n = I.ring.n
    for order in _audit_orders(I, ctx):
        chain = _lift_chain(I, order, steps)
        for step, ((_, O, prof), (_, O1, prof1)) in enumerate(zip(chain, chain[1:])):
            parents = lifted_parents(O, O1, n)
            for pos, c in enumerate(O1.order):
                before, after = prof.values[min(parents[c])], prof1.values[pos]
                if after > before or (before > 0 and after == before):
                    return (f"order {O.order}, lift step {step}: lambda {before} -> {after} "
                            f"at {c} (lifted order {O1.order})")
    return None


def check_lambda_lift_lq(I, ctx):
    """After max lambda lifts the lifted order has linear quotients."""
    for order in _audit_orders(I, ctx):
        steps = lambda_profile(I, order).max
        if not _lift_chain(I, order, steps)[-1][2].linear_quotients:
            return f"order {order.order}: no linear quotients after {steps} lifts"
    return None


def check_lower_bound(I, ctx):
    lb = generation_lower_bound_check(I, ctx["d3"], ctx["bounds"].value)
    return None if lb.holds else f"omega surrogate {lb.omega_surrogate} - 1 > d3 {ctx['d3']}"


def check_squarefree(I, ctx):
    if not all(e <= 1 for g in I.gens for e in g):
        return "skip"
    return None if ctx["d3"] == 0 else f"squarefree ideal with d3={ctx['d3']}"


def check_ci(I, ctx):
    cf = ci_dao_closed_form(I)
    if cf is None:
        return "skip"
    if cf.d3 != ctx["d3"]:
        return f"case {cf.case}: closed form d1=d3={cf.d3}, engine {ctx['d3']}"
    if cf.d2 is not None and ctx.get("d2") is not None and cf.d2 != ctx["d2"]:
        return f"case {cf.case}: closed form d2={cf.d2}, engine {ctx['d2']}"
    return None


def check_lq_fullness(I, ctx):
    if ctx["lq_order"] is None:
        return "skip"
    cfg = ctx["config"]
    if not is_componentwise_linear(I, cfg.field):
        return "linear quotients found but not componentwise linear"
    if not is_weakly_m_full(I):
        return "linear quotients but not weakly m-full"
    for name, fn in (("m-full", is_m_full_randomized), ("full", is_full_randomized)):
        v = fn(I, cfg.trials, cfg.seed, cfg.field)
        if not (v.value and v.certified):
            return f"linear quotients but {name} verdict {tuple(v)}"
    return None


def check_betti_oracle(I, ctx):
    if I.ring.n > ctx["config"].oracle_max_n:
        return "skip"
    f = ctx["config"].field
    a, b = multigraded_betti(I, f), koszul_betti_oracle(I, f)
    if a.coarse() != b.coarse():
        return f"coarse Betti tables differ: {a.coarse()} vs {b.coarse()}"
    return None


def check_order_search(I, ctx):
    b = ctx["bounds"].lin_quot
    if not b.exhaustive:
        return "skip"
    heur = min(lambda_profile(I, o).max for o in heuristic_orders(I))
    return None if b.value <= heur else f"exhaustive {b.value} > heuristic {heur}"


def check_degree_sum_dominance(I, ctx):
    order = GeneratorOrder(sorted(I.gens, key=sum))
    lam = lambda_profile(I, order).max
    return None if lam <= max(ctx["bounds"].degree_sum, 0) else f"degree-ascending max lambda {lam} > degree sum bound"


def check_d2_le_d3(I, ctx):
    return None if ctx["d2"] <= ctx["d3"] else f"d2={ctx['d2']} > d3={ctx['d3']}"


CHECKS = {
    "bounds": check_bounds,
    "dao_module": check_dao_module,
    "rees_colon": check_rees_colon,
    "lir": check_lir,
    "lambda_decay": check_lambda_decay,
    "lambda_lift_lq": check_lambda_lift_lq,
    "lower_bound": check_lower_bound,
    "squarefree": check_squarefree,
    "ci": check_ci,
    "lq_fullness": check_lq_fullness,
    "betti_oracle": check_betti_oracle,
    "order_search": check_order_search,
    "degree_sum_dominance": check_degree_sum_dominance,
    "d2_le_d3": check_d2_le_d3,
}


def _context(I, config):
    use_reg = "bounds" in config.checks
    bounds = all_bounds(I, use_reg=use_reg, field=config.field)
    d3, _ = d3_exact(I, bounds.value)
    ctx = {"config": config, "bounds": bounds, "d3": d3}
    if I.mu <= DEFAULT_EXHAUSTIVE_CAP:
        ctx["best_order"] = min_max_lambda(I)[1]
    else:
        ctx["best_order"] = min(heuristic_orders(I), key=lambda o: lambda_profile(I, o).max)
    if "lq_fullness" in config.checks:
        ctx["lq_order"] = find_linear_quotient_order(I)
    if "d2_le_d3" in config.checks or "ci" in config.checks:
        ctx["d2"] = d2_randomized(I, d3, config.trials, config.seed, config.field).d2
    return ctx


def audit_instance(I: MonomialIdeal, config: AuditConfig) -> dict:
    """{check: None | 'skip' | description of the violation}."""
    ctx = _context(I, config)
    out = {name: CHECKS[name](I, ctx) for name in config.checks}
    out["_d3"] = ctx["d3"]
    return out


def random_audit(config: AuditConfig) -> AuditSummary:
    summary = AuditSummary(config)
    rng = random.Random(f"daonum-audit:{config.seed}")
    nonzero_d3 = 0
    with limits(max_enum=config.max_enum, time_budget=config.time_budget):
        for _ in range(config.samples):
            I = random_ideal(rng, config)
            try:
                results = audit_instance(I, config)
            except BudgetExceededError:
                summary.budget_exhausted = True
                break
            summary.completed += 1
            nonzero_d3 += results.pop("_d3") > 0
            for name, res in results.items():
                if res == "skip":
                    continue
                summary.counts[name] = summary.counts.get(name, 0) + 1
                if res is not None:
                    summary.violations[name] = summary.violations.get(name, 0) + 1
                    if summary.first_counterexample is None:
                        summary.first_counterexample = Violation(name, ideal_to_json(I), res)
    summary.stats["instances with d3 > 0"] = nonzero_d3
    return summary
