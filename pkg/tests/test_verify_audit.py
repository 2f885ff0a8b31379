import random
from math import comb

import pytest

from daonum.audit import (
    ALL_CHECKS,
    BOUND_CHAIN_CHECKS,
    AuditConfig,
    audit_instance,
    random_audit,
    random_ideal,
)
from daonum.ideal import MonomialIdeal, Ring
from daonum.verify import render_rows, rows_to_json, verify_paper


@pytest.fixture(scope="module")
def rows():
    return verify_paper()


def test_golden_rows_pass_except_printed_degree_sum(rows):
    failing = [r for r in rows if not r.passed]
    assert all(r.quantity == "degree-sum bound (printed)" for r in failing)
    # the printed value exceeds the evaluated formula by exactly d
    for r in failing:
        d = int(r.instance.split("^")[1].split(",")[0])
        assert r.expected - r.computed == d
    assert len(failing) == 12


def test_golden_groups_present(rows):
    assert {r.group for r in rows} == {"examples-a", "examples-b", "examples-c", "complete-intersections",
                                       "socle-corollary"}
    assert "checks passed" in render_rows(rows)
    assert len(rows_to_json(rows)) == len(rows)


def test_corrupt_mode_adds_a_failure():
    bad = [r for r in verify_paper(corrupt=True) if not r.passed and r.group == "examples-b"]
    assert len(bad) == 1 and bad[0].expected == 11 and bad[0].computed == 10


class TestAuditConfig:
    @pytest.mark.parametrize("kw", [
        {"n_range": (0, 2)}, {"n_range": (3, 2)}, {"gens_range": (0, 1)}, {"exp_cap": 0},
        {"samples": 0}, {"trials": 0}, {"time_budget": -1.0}, {"mode": "weird"}, {"checks": ("nope",)},
    ])
    def test_rejects(self, kw):
        with pytest.raises(ValueError):
            AuditConfig(**kw)


def test_sampler_respects_space():
    rng = random.Random(0)
    cfg = AuditConfig(n_range=(2, 4), exp_cap=2, gens_range=(1, 3))
    for _ in range(100):
        I = random_ideal(rng, cfg)
        assert 2 <= I.ring.n <= 4 and I.mu <= 3 and max(I.bounding_multidegree) <= 2
        assert not I.is_zero and not I.is_unit
    ci = AuditConfig(mode="ci", n_range=(1, 5), exp_cap=4)
    sq = AuditConfig(mode="squarefree")
    for _ in range(100):
        I = random_ideal(rng, ci)
        supports = [{t for t, e in enumerate(g) if e} for g in I.gens]
        assert all(not (a & b) for i, a in enumerate(supports) for b in supports[:i])
        assert max(random_ideal(rng, sq).bounding_multidegree) == 1


def test_audit_is_deterministic():
    cfg = AuditConfig(samples=15, seed=7, checks=("bounds", "dao_module", "betti_oracle"))
    assert random_audit(cfg).as_dict() == random_audit(cfg).as_dict()


def test_squarefree_and_ci_modes():
    s = random_audit(AuditConfig(samples=40, mode="squarefree", checks=("squarefree", "bounds", "lq_fullness")))
    assert s.ok and s.counts["squarefree"] == 40
    c = random_audit(AuditConfig(samples=40, mode="ci", n_range=(1, 4), exp_cap=3, checks=("ci", "bounds")))
    assert c.ok and c.counts["ci"] == 40


def test_every_check_runs_on_a_small_sample():
    s = random_audit(AuditConfig(samples=20, seed=3))
    assert set(s.counts) <= set(ALL_CHECKS)
    for name in set(ALL_CHECKS) - {"lambda_decay", "lambda_lift_lq"}:
        assert s.violations.get(name, 0) == 0, name


def test_strict_lambda_decay_has_counterexamples():
    I = MonomialIdeal(Ring.of(2), [(0, 3), (3, 1)])
    res = audit_instance(I, AuditConfig(checks=BOUND_CHAIN_CHECKS))
    assert res["bounds"] is None and res["rees_colon"] is None and res["lir"] is None
    assert "lambda 1 -> 1" in res["lambda_decay"]
    s = random_audit(AuditConfig(samples=60, seed=42, checks=("lambda_decay",)))
    assert s.first_counterexample is not None and s.first_counterexample.check == "lambda_decay"
    assert "first counterexample" in s.render()


def test_budget_stops_early():
    s = random_audit(AuditConfig(samples=10_000, time_budget=0.2, checks=("bounds",)))
    assert s.budget_exhausted and s.completed < 10_000
