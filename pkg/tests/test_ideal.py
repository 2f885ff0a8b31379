import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import ideal_pairs, ideals
from daonum.errors import ContextMismatchError, ProperIdealError
from daonum.ideal import (
    MonomialIdeal,
    Ring,
    colon_ideal_by_m,
    colon_monomial,
    colon_variable_rees,
    component_ideal,
    contains_in_m_power_product,
    graded_dim,
    intersect,
    m_power,
    maximal_ideal,
    membership,
    minimalize,
    multiply_by_m_power,
    socle_monomials,
    standard_monomials,
    structure_report,
)
from daonum.verify import example_b

R2, R3 = Ring.of(2), Ring.of(3)


def I2(*gens):
    return MonomialIdeal(R2, gens)


def I3(*gens):
    return MonomialIdeal(R3, gens)


class TestRing:
    def test_default_names(self):
        assert Ring.of(3).var_names == ("x", "y", "z")
        assert Ring.of(4).var_names == ("x1", "x2", "x3", "x4")

    @pytest.mark.parametrize("names", [(), ("x", "x"), ("1x",), ("a b",), ("",)])
    def test_invalid_names(self, names):
        with pytest.raises(ValueError):
            Ring(names)

    def test_check_rejects_wrong_length_and_negatives(self):
        with pytest.raises(ContextMismatchError):
            R2.check((1, 2, 3))
        with pytest.raises(ValueError):
            R2.check((1, -1))

    def test_format(self):
        assert R3.format((2, 1, 0)) == "x^2*y"
        assert R3.format((0, 0, 0)) == "1"


class TestMinimalize:
    def test_examples(self):
        assert minimalize(R2, [(2, 0), (2, 1), (0, 3)]).gens == ((2, 0), (0, 3))
        assert minimalize(R2, [(1, 0), (0, 1)]).gens == ((1, 0), (0, 1))
        assert minimalize(R2, [(3, 0), (2, 1), (1, 2), (0, 3)]).mu == 4

    def test_graded_lex_order(self):
        assert I3((0, 0, 1), (2, 0, 0), (1, 1, 0)).gens == ((0, 0, 1), (2, 0, 0), (1, 1, 0))

    def test_mixed_contexts(self):
        with pytest.raises(ContextMismatchError):
            I2((1, 0)) + I3((1, 0, 0))
        with pytest.raises(ContextMismatchError):
            minimalize(R2, [(1, 0, 0)])

    def test_zero_and_unit(self):
        assert MonomialIdeal(R2, ()).is_zero
        assert I2((0, 0), (1, 0)).is_unit

    @given(st.data())
    def test_matches_oracle_and_is_idempotent(self, data):
        n = data.draw(st.integers(1, 4))
        gens = data.draw(st.lists(st.tuples(*[st.integers(0, 3)] * n), min_size=1, max_size=8))
        I = MonomialIdeal(Ring.of(n), gens)
        assert set(I.gens) == oracles.minimal(gens)
        assert MonomialIdeal(I.ring, I.gens) == I
        assert MonomialIdeal(I.ring, list(reversed(gens))) == I


class TestProductsAndColons:
    def test_times_m(self):
        I = I2((2, 0), (0, 2))
        assert multiply_by_m_power(I, 1) == m_power(R2, 3)
        assert multiply_by_m_power(I, 0) is I
        assert m_power(Ring.of(4), 3).mu == 20
        assert multiply_by_m_power(maximal_ideal(R3), 2) == m_power(R3, 3)

    def test_colon_monomial(self):
        assert colon_monomial(I2((2, 0), (0, 2)).times_m(1), (1, 0)) == m_power(R2, 2)
        J = I3((2, 1, 0), (0, 0, 3))
        assert colon_monomial(J, (0, 0, 0)) == J
        assert colon_monomial(I2((2, 0)), (0, 3)) == I2((2, 0))

    def test_colon_variable_rees_examples(self):
        assert colon_variable_rees(I2((2, 0), (0, 2)), 0, 0) == m_power(R2, 2)
        assert colon_variable_rees(I2((0, 2)), 0, 0) == I2((0, 2))
        assert colon_variable_rees(I2((1, 1)), 0, 0) == I2((1, 1), (0, 2))
        with pytest.raises(IndexError):
            colon_variable_rees(I2((1, 1)), 0, 2)

    def test_intersect_examples(self):
        assert intersect(I2((1, 0)), I2((0, 1))) == I2((1, 1))
        assert intersect(I2((1, 0), (0, 2)), I2((2, 0), (0, 1))) == I2((2, 0), (1, 1), (0, 2))
        J = I3((1, 2, 0), (0, 0, 1))
        assert J & J == J

    def test_colon_by_m_examples(self):
        assert colon_ideal_by_m(m_power(R2, 3)) == m_power(R2, 2)
        assert colon_ideal_by_m(I2((2, 0), (0, 2))) == m_power(R2, 2)
        J = I3((1, 1, 0), (0, 0, 1))
        assert colon_ideal_by_m(J) == J

    @given(ideals(n_max=3, exp_max=3, gens_max=4), st.integers(0, 2))
    def test_times_m_matches_oracle(self, I, k):
        assert set(multiply_by_m_power(I, k).gens) == oracles.times_m_power(I.gens, I.ring.n, k)

    @given(ideals(n_max=4, exp_max=3, gens_max=4), st.integers(0, 3), st.data())
    def test_rees_colon_closed_form(self, I, k, data):
        t = data.draw(st.integers(0, I.ring.n - 1))
        direct = colon_monomial(multiply_by_m_power(I, k + 1), I.ring.var(t))
        assert colon_variable_rees(I, k, t) == direct

    @given(ideals(n_max=3, exp_max=3, gens_max=4))
    def test_colon_by_m_matches_oracle(self, I):
        top = sum(I.bounding_multidegree)
        assert set(colon_ideal_by_m(I).gens) == oracles.colon_by_m(I.gens, I.ring.n, top)

    @given(ideals(n_max=3, exp_max=3, gens_max=4))
    def test_colon_by_m_grows(self, I):
        C = colon_ideal_by_m(I)
        assert all(membership(C, g) for g in I.gens)
        CC = colon_ideal_by_m(C) if not C.is_unit else C
        assert all(membership(CC, g) for g in C.gens)

    @given(ideal_pairs())
    def test_intersection_laws(self, pair):
        I, J = pair
        K = intersect(I, J)
        assert K == intersect(J, I)
        assert intersect(K, I) == K
        for v in oracles.box(tuple(max(a, b) for a, b in zip(I.lcm, J.lcm))):
            assert membership(K, v) == (membership(I, v) and membership(J, v))

    @given(ideal_pairs(gens_max=3), st.data())
    def test_intersection_associative(self, pair, data):
        I, J = pair
        vec = st.tuples(*[st.integers(0, 3)] * I.ring.n).filter(any)
        K = MonomialIdeal(I.ring, data.draw(st.lists(vec, min_size=1, max_size=3)))
        assert intersect(intersect(I, J), K) == intersect(I, intersect(J, K))


class TestMembershipAndDims:
    def test_membership_examples(self):
        assert not membership(I2((2, 0), (0, 2)), (1, 1))
        assert membership(MonomialIdeal(Ring.of(1), [(2,)]), (3,))
        assert (0, 0) not in I2((1, 0))

    def test_graded_dim_examples(self):
        assert graded_dim(m_power(R2, 2), 3) == 4
        assert graded_dim(I2((2, 0), (0, 2)), 2) == 2
        assert graded_dim(I2((2, 0), (0, 2)), 3) == 4
        assert graded_dim(I2((2, 0)), -1) == 0

    @given(ideals(n_max=4, exp_max=3, gens_max=5), st.integers(0, 6))
    def test_graded_dim_matches_oracle_and_grows(self, I, j):
        assert graded_dim(I, j) == oracles.graded_dim(I.gens, I.ring.n, j)
        assert graded_dim(I, j + 1) >= graded_dim(I, j)

    @given(ideals(n_max=3, exp_max=3, gens_max=4), st.integers(0, 3))
    def test_vectorized_membership(self, I, k):
        Ik = multiply_by_m_power(I, k)
        pts = np.array(list(oracles.box(tuple(d + 2 for d in Ik.lcm))), dtype=np.int64)
        want = np.array([membership(Ik, v) for v in map(tuple, pts)])
        assert (Ik.contains_array(pts) == want).all()
        assert (contains_in_m_power_product(I, k, pts) == want).all()

    def test_standard_monomials(self):
        assert [tuple(v) for v in standard_monomials(I2((2, 0), (0, 2)), 2)] == [(1, 1)]


class TestSocle:
    def test_examples(self):
        assert socle_monomials(m_power(R2, 2)) == [(1, 0), (0, 1)]
        assert socle_monomials(I2((1, 0))) == []
        assert socle_monomials(I2((2, 0), (0, 2))) == [(1, 1)]

    def test_rejects_unit(self):
        with pytest.raises(ProperIdealError):
            socle_monomials(I2((0, 0)))

    @given(ideals(n_max=3, exp_max=3, gens_max=5))
    def test_box_loses_nothing(self, J):
        assert socle_monomials(J) == oracles.socle(J.gens, J.ring.n)


class TestStructure:
    def test_examples(self):
        s = structure_report(I2((2, 0), (0, 2)))
        assert (s.mu, s.alpha, s.omega, s.bounding_multidegree, s.degree_excess) == (2, 2, 2, (2, 2), 2)
        assert s.complete_intersection and s.equigenerated and not s.squarefree
        b = structure_report(example_b())
        assert (b.mu, b.omega, b.degree_excess, b.squarefree) == (6, 3, 0, True)
        assert structure_report(I3((2, 1, 0), (0, 0, 3))).complete_intersection
        assert not structure_report(I3((1, 1, 0), (0, 1, 1))).complete_intersection

    def test_component_examples(self):
        assert component_ideal(I2((1, 0), (0, 3)), 2) == I2((2, 0), (1, 1))
        I = I3((1, 1, 0), (0, 1, 1), (2, 0, 0))
        assert component_ideal(I, 2) == I
        assert component_ideal(I, 1).is_zero

    @given(ideals(n_max=4, exp_max=3, gens_max=4), st.integers(1, 4))
    def test_lir(self, I, k):
        j = I.alpha + k
        lhs = component_ideal(multiply_by_m_power(I, 1), j)
        rhs = component_ideal(I, j - 1) * maximal_ideal(I.ring)
        assert lhs == rhs
