import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import ideals
from daonum.betti import QQ, FieldConfig, has_linear_quotients
from daonum.dao import (
    LinearFormSample,
    colon_linear_form_dims,
    d2_randomized,
    d3_exact,
    dao_module_component,
    generation_lower_bound_check,
    is_full_randomized,
    is_m_full_randomized,
    is_weakly_m_full,
    sample_linear_form,
    socle_check,
    verify_d1,
)
from daonum.errors import ProperIdealError
from daonum.ideal import MonomialIdeal, Ring, m_power, maximal_ideal, multiply_by_m_power
from daonum.verify import example_b, pure_powers

R2, R3 = Ring.of(2), Ring.of(3)
GF = FieldConfig(32003)


class TestWeaklyMFull:
    def test_examples(self):
        assert not is_weakly_m_full(pure_powers(R2, (2, 2)))
        assert is_weakly_m_full(m_power(R2, 2))
        assert is_weakly_m_full(example_b())

    def test_rejects_improper(self):
        with pytest.raises(ProperIdealError):
            is_weakly_m_full(MonomialIdeal(R2, [(0, 0)]))
        with pytest.raises(ProperIdealError):
            d3_exact(MonomialIdeal(R2, []))

    @given(ideals(n_max=3, exp_max=1, gens_max=6))
    def test_squarefree(self, I):
        assert is_weakly_m_full(I)
        assert d3_exact(I)[0] == 0


class TestDaoModule:
    @pytest.mark.parametrize("a", range(1, 7))
    def test_pure_power_pair(self, a):
        d3, table = d3_exact(pure_powers(R2, (a, a)))
        assert d3 == a - 1
        assert table.dims() == [1] * (a - 1)
        assert all(r.basis == ((a - 1, a - 1),) for r in table.rows)

    def test_examples(self):
        assert d3_exact(pure_powers(R2, (2, 3)))[0] == 1
        assert d3_exact(pure_powers(R3, (2, 3, 4)))[0] == 3
        assert d3_exact(example_b())[0] == 0
        assert d3_exact(m_power(R3, 3))[0] == 0

    def test_negative_k(self):
        with pytest.raises(ValueError):
            dao_module_component(m_power(R2, 2), -1)

    @given(ideals(n_max=3, exp_max=3, gens_max=4), st.integers(0, 3))
    def test_matches_oracle_on_looser_box(self, I, k):
        assert list(dao_module_component(I, k).basis) == sorted(
            oracles.dao_component(I.gens, I.ring.n, k), key=lambda v: (sum(v), tuple(-e for e in v)))

    @given(ideals(n_max=3, exp_max=3, gens_max=5))
    def test_vanishing_matches_weak_m_fullness(self, I):
        d3, table = d3_exact(I)
        for k in range(table.certified_bound + 1):
            assert (dao_module_component(I, k).dim == 0) == is_weakly_m_full(multiply_by_m_power(I, k))
            assert (dao_module_component(I, k).dim == 0) == (k >= d3)


class TestLinearForms:
    def test_colon_dims_example(self):
        J = pure_powers(R2, (2, 2))
        x = LinearFormSample((1, 1))
        assert colon_linear_form_dims(J, x, 1) == 1
        assert colon_linear_form_dims(J, x, 1, FieldConfig(2)) == 1

    def test_colon_dims_trivial(self):
        J = m_power(R3, 2)
        x = sample_linear_form(3)
        assert colon_linear_form_dims(J, x, 2) == 6
        assert colon_linear_form_dims(J, x, 3) == 10

    def test_samples_are_deterministic_and_nonzero(self):
        a = sample_linear_form(4, QQ, seed=7, key=2, trial=1)
        assert a == sample_linear_form(4, QQ, seed=7, key=2, trial=1)
        assert a != sample_linear_form(4, QQ, seed=7, key=2, trial=2)
        assert all(1 <= c < 2 ** 31 for c in a.coeffs)
        b = sample_linear_form(5, FieldConfig(3), seed=1)
        assert all(c in (1, 2) for c in b.coeffs)


class TestFullness:
    def test_full_examples(self):
        for d in (1, 2, 3):
            assert is_full_randomized(m_power(R3, d)) == (True, True)
            assert is_m_full_randomized(m_power(R3, d)) == (True, True)
        for a in (2, 3, 4):
            v = is_full_randomized(pure_powers(R2, (a, a)))
            assert v == (False, True)
        assert is_full_randomized(example_b()).value

    def test_m_full_examples(self):
        assert is_m_full_randomized(m_power(R2, 2)) == (True, True)
        assert is_m_full_randomized(pure_powers(R2, (2, 2))) == (False, True)
        assert is_m_full_randomized(multiply_by_m_power(pure_powers(R2, (2, 2)), 1)) == (True, True)

    def test_prime_field_mode(self):
        assert is_full_randomized(m_power(R3, 2), field=GF) == (True, True)
        assert d2_randomized(pure_powers(R2, (3, 3)), field=GF).d2 == 2

    @given(ideals(n_max=3, exp_max=3, gens_max=5))
    def test_m_full_implies_weakly_m_full(self, J):
        if is_m_full_randomized(J).value:
            assert is_weakly_m_full(J)

    @given(ideals(n_max=3, exp_max=2, gens_max=5))
    def test_linear_quotients_imply_every_fullness(self, I):
        if has_linear_quotients(I) is not None:
            assert is_weakly_m_full(I)
            assert is_full_randomized(I) == (True, True)
            assert is_m_full_randomized(I) == (True, True)


class TestD2:
    @pytest.mark.parametrize("a", range(1, 6))
    def test_pure_power_pair(self, a):
        r = d2_randomized(pure_powers(R2, (a, a)))
        assert r.d2 == a - 1 and r.certified
        assert all(v.certified for _, v in r.scan)

    def test_zero_cases(self):
        assert d2_randomized(m_power(R3, 2)).d2 == 0
        assert d2_randomized(MonomialIdeal(R3, [(1, 1, 0), (0, 0, 2)])).d2 == 0

    @given(ideals(n_max=3, exp_max=3, gens_max=4))
    def test_d2_at_most_d3(self, I):
        d3, _ = d3_exact(I)
        r = d2_randomized(I, d3)
        assert 0 <= r.d2 <= d3
        assert r == d2_randomized(I, d3)

    def test_verify_d1(self):
        for a in (2, 3):
            I = pure_powers(R2, (a, a))
            assert verify_d1(I, a - 1, a + 1)
            assert not verify_d1(I, a - 2, a + 1)


class TestLowerBoundAndSocle:
    def test_lower_bound_examples(self):
        lb = generation_lower_bound_check(maximal_ideal(R3), 0, 0)
        assert lb.omega_surrogate == 0 and lb.holds
        for a in (2, 3, 4):
            assert generation_lower_bound_check(pure_powers(R2, (a, a)), a - 1, a - 1).holds

    @given(ideals(n_max=3, exp_max=3, gens_max=5))
    def test_lower_bound_holds(self, I):
        d3, table = d3_exact(I)
        assert generation_lower_bound_check(I, d3, table.certified_bound).holds

    @given(ideals(n_max=3, exp_max=3, gens_max=4))
    def test_socle_identity(self, I):
        k = max(sum(I.bounding_multidegree) - I.ring.n, 0)
        for kk in (k, k + 1):
            assert socle_check(I, kk).holds
