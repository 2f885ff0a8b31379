from math import comb

import pytest
from hypothesis import given

from conftest import ideals
from daonum.bounds import (
    all_bounds,
    ci_dao_closed_form,
    degree_sum_bound,
    equigenerated_reg_bound,
    lin_quot_bound,
    multidegree_bound,
)
from daonum.dao import d3_exact
from daonum.errors import ProperIdealError
from daonum.ideal import MonomialIdeal, Ring, m_power
from daonum.verify import example_b, pure_powers

R2, R3 = Ring.of(2), Ring.of(3)


@pytest.mark.parametrize("a", range(1, 7))
def test_pure_power_pair(a):
    I = pure_powers(R2, (a, a))
    assert degree_sum_bound(I) == a - 1
    assert multidegree_bound(I) == 2 * a - 2
    assert lin_quot_bound(I).value == a - 1
    assert equigenerated_reg_bound(I) == a - 1
    assert all_bounds(I).value == a - 1


def test_example_b():
    I = example_b()
    assert degree_sum_bound(I) == 10
    assert multidegree_bound(I) == 0
    assert lin_quot_bound(I).value == 0
    assert all_bounds(I).value == 0


@pytest.mark.parametrize("n,d", [(n, d) for n in (2, 3, 4) for d in range(1, 5)])
def test_max_ideal_powers(n, d):
    I = m_power(Ring.of(n), d)
    c = comb(n + d - 1, d)
    # the formula itself evaluates to d*C + 1 - C - d
    assert degree_sum_bound(I) == d * c + 1 - c - d
    assert multidegree_bound(I) == (d - 1) * n
    assert lin_quot_bound(I, "heuristic").value == 0
    if n <= 3:
        assert equigenerated_reg_bound(I) == 0


def test_equigenerated_bound():
    assert equigenerated_reg_bound(MonomialIdeal(R3, [(1, 1, 0), (1, 0, 1), (0, 1, 1)])) == 0
    assert equigenerated_reg_bound(MonomialIdeal(R2, [(1, 0), (0, 2)])) is None


def test_heuristic_label():
    I = m_power(R3, 3)  # ten generators, above the default cap
    b = lin_quot_bound(I)
    assert not b.exhaustive and b.value == 0
    with pytest.raises(ValueError):
        lin_quot_bound(I, "random")


def test_rejects_improper():
    with pytest.raises(ProperIdealError):
        degree_sum_bound(MonomialIdeal(R2, [(0, 0)]))
    with pytest.raises(ProperIdealError):
        multidegree_bound(MonomialIdeal(R2, []))


class TestCompleteIntersections:
    def test_cases(self):
        a = ci_dao_closed_form(MonomialIdeal(R2, [(2, 0)]))
        assert (a.case, a.d1, a.d2, a.d3) == ("a", 0, 0, 0)
        b = ci_dao_closed_form(pure_powers(R3, (2, 3, 4)))
        assert (b.case, b.d1, b.d2, b.d3) == ("b", 3, None, 3)
        assert ci_dao_closed_form(pure_powers(R2, (2, 3))).d3 == 1
        assert ci_dao_closed_form(pure_powers(R3, (4, 3, 2))).d3 == 3
        c = ci_dao_closed_form(MonomialIdeal(R3, [(1, 1, 0), (0, 0, 2)]))
        assert (c.case, c.d1, c.d2, c.d3) == ("c", 0, 0, 0)
        assert ci_dao_closed_form(MonomialIdeal(R2, [(1, 1), (0, 2)])) is None

    @pytest.mark.parametrize("exps", [(1, 1), (1, 4), (3, 3, 1), (2, 2, 2), (1, 2, 3, 2)])
    def test_pure_powers_match_engine(self, exps):
        I = pure_powers(Ring.of(len(exps)), exps)
        assert d3_exact(I)[0] == ci_dao_closed_form(I).d3


@given(ideals(n_max=3, exp_max=3, gens_max=6))
def test_every_bound_dominates_d3(I):
    b = all_bounds(I)
    d3, table = d3_exact(I, b.value)
    for v in (b.lin_quot.value, b.degree_sum, b.multidegree):
        assert d3 <= max(v, 0)
    if b.equigenerated_reg is not None:
        assert d3 <= b.equigenerated_reg
    assert b.value >= 0


@given(ideals(n_max=3, exp_max=3, gens_max=6))
def test_exhaustive_never_worse_than_heuristic(I):
    assert lin_quot_bound(I, "exhaustive").value <= lin_quot_bound(I, "heuristic").value


@given(ideals(n_max=3, exp_max=1, gens_max=6))
def test_squarefree_bound_is_zero(I):
    assert multidegree_bound(I) == 0
