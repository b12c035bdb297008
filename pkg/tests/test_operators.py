"""Derivation, raising operators, generated sequences, commutator engine."""

import random
from fractions import Fraction

import pytest

from symtrace.algebra import Monomial, Polynomial, partial
from symtrace.operators import (
    DELTA,
    IDENTITY,
    RAISING_MINUS,
    RAISING_PLUS,
    cauchy_j,
    cauchy_j_closed,
    cauchy_k,
    cauchy_k_closed,
    commutator,
    delta,
    lowering_coefficient,
    monomial_from_symbol,
    monomials_of_weight,
    monomials_up_to_weight,
    op_equal_up_to_weight,
    partial_op,
    raising_minus,
    raising_plus,
    var_op,
)
from symtrace.partitions import cauchy_h, enumerate_partitions, sign_of_symbol

x1 = Polynomial.variable(1)
x2 = Polynomial.variable(2)
x3 = Polynomial.variable(3)
x4 = Polynomial.variable(4)
x5 = Polynomial.variable(5)


class TestDelta:
    def test_single_variable(self):
        assert delta(x1) == x2
        assert delta(x3) == 3 * x4

    def test_power(self):
        assert delta(x2**3) == 6 * x2**2 * x3

    def test_constant(self):
        assert delta(Polynomial.constant(5)).is_zero()

    def test_leibniz_on_product(self):
        p, q = x1**2 - x2, x1 * x3
        assert delta(p * q) == delta(p) * q + p * delta(q)

    def test_raises_weight_by_one(self):
        for w in range(1, 8):
            for m in monomials_of_weight(w):
                image = delta(Polynomial({m: 1}))
                assert image.weights() <= {w + 1}


class TestRaising:
    def test_minus_generates_j2(self):
        assert raising_minus(x1) == x1**2 - x2

    def test_minus_generates_j3(self):
        assert raising_minus(x1**2 - x2) == x1**3 - 3 * x1 * x2 + 2 * x3

    def test_minus_of_zero(self):
        assert raising_minus(Polynomial.zero()).is_zero()

    def test_plus_generates_k2(self):
        assert raising_plus(x1) == x1**2 + x2

    def test_plus_generates_k3(self):
        assert raising_plus(x1**2 + x2) == x1**3 + 3 * x1 * x2 + 2 * x3

    def test_plus_of_zero(self):
        assert raising_plus(Polynomial.zero()).is_zero()


class TestSequences:
    def test_j1(self):
        assert cauchy_j(1) == x1

    def test_j4(self):
        assert cauchy_j(4) == x1**4 - 6 * x1**2 * x2 + 8 * x1 * x3 + 3 * x2**2 - 6 * x4

    def test_j5(self):
        expected = (x1**5 - 10 * x1**3 * x2 + 20 * x1**2 * x3 + 15 * x1 * x2**2
                    - 30 * x1 * x4 - 20 * x2 * x3 + 24 * x5)
        assert cauchy_j(5) == expected

    def test_k1_and_k2(self):
        assert cauchy_k(1) == x1
        assert cauchy_k(2) == x1**2 + x2

    def test_k3_transposition_coefficient(self):
        assert cauchy_k(3).coefficient(Monomial({1: 1, 2: 1})) == 3

    def test_homogeneous_of_weight_k(self):
        for k in range(1, 13):
            assert cauchy_j(k).weights() == {k}
            assert cauchy_k(k).weights() == {k}

    def test_index_zero_is_one(self):
        assert cauchy_j(0) == Polynomial.one()
        assert cauchy_k(0) == Polynomial.one()
        assert cauchy_j_closed(0) == Polynomial.one()

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            cauchy_j(-1)
        with pytest.raises(ValueError):
            cauchy_k(-1)


class TestClosedForm:
    def test_j2(self):
        assert cauchy_j_closed(2) == x1**2 - x2

    def test_j4_pair_coefficient(self):
        assert cauchy_j_closed(4).coefficient(Monomial({2: 2})) == 3 == cauchy_h([0, 2])

    @pytest.mark.parametrize("k", range(1, 10))
    def test_agrees_with_iteration(self, k):
        assert cauchy_j_closed(k) == cauchy_j(k)
        assert cauchy_k_closed(k) == cauchy_k(k)

    def test_sign_pattern(self):
        for k in range(1, 10):
            jk = cauchy_j(k)
            for lam in enumerate_partitions(k):
                alpha = lam.to_symbol()
                m = monomial_from_symbol(alpha)
                assert jk.coefficient(m) == sign_of_symbol(alpha) * cauchy_h(alpha)

    def test_unsigned_coefficients_coincide(self):
        for k in range(1, 10):
            jk, kk = cauchy_j(k), cauchy_k(k)
            for m in jk.terms():
                assert abs(jk.coefficient(m)) == kk.coefficient(m)


class TestCommutator:
    def test_d1_x1_is_identity_on_x2(self):
        assert commutator(partial_op(1), var_op(1))(x2) == x2

    def test_delta_x2_on_constant(self):
        assert commutator(DELTA, var_op(2))(Polynomial.one()) == 2 * x3

    def test_raising_bracket_on_x1(self):
        assert commutator(RAISING_MINUS, RAISING_PLUS)(x1) == -2 * x1 * x2

    def test_linearity_spot_check(self):
        rng = random.Random(7)
        ops = [DELTA, RAISING_MINUS, partial_op(2), var_op(3),
               commutator(DELTA, var_op(1))]
        for op in ops:
            for _ in range(5):
                p = Polynomial({m: rng.randint(-4, 4) for m in monomials_up_to_weight(4)})
                q = Polynomial({m: rng.randint(-4, 4) for m in monomials_up_to_weight(4)})
                a, b = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3), 2)
                assert op(a * p + b * q) == a * op(p) + b * op(q)


class TestOpEquality:
    def test_d1_x1_identity(self):
        assert op_equal_up_to_weight(commutator(partial_op(1), var_op(1)), IDENTITY, 8)

    def test_delta_x3_bracket(self):
        assert op_equal_up_to_weight(commutator(DELTA, var_op(3)), 3 * var_op(4), 8)

    def test_distinct_operators(self):
        assert not op_equal_up_to_weight(DELTA, var_op(1), 3)

    def test_basis_sizes(self):
        # number of weight-w monomials = number of partitions of w
        assert [len(monomials_of_weight(w)) for w in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


class TestLowering:
    @pytest.mark.parametrize("n", range(2, 11))
    def test_d1_lowers_with_constant_n(self, n):
        assert partial(cauchy_j(n), 1) == n * cauchy_j(n - 1)

    def test_dk_lowering_constants(self):
        # oracle: direct differentiation of the generated polynomials
        for n in range(1, 11):
            for k in range(1, n + 1):
                got = partial(cauchy_j(n), k)
                assert got == lowering_coefficient(n, k) * cauchy_j(n - k)

    def test_known_constants(self):
        assert lowering_coefficient(4, 2) == -6
        assert lowering_coefficient(4, 3) == 8
        assert lowering_coefficient(4, 4) == -6
        assert lowering_coefficient(5, 1) == 5
