"""Symmetric-function evaluation and the power-sum conversions."""

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

import pytest

from symtrace.operators import cauchy_j
from symtrace.symfun import (
    c_from_power_sums,
    eval_elementary,
    eval_power_sum,
    eval_wronski,
    w_from_power_sums,
)

XS = (1, 2, 3)


def wronski_by_multisets(k, xs):
    # Independent oracle: the defining sum over weakly increasing tuples.
    total = Fraction(0)
    for combo in combinations_with_replacement([Fraction(x) for x in xs], k):
        term = Fraction(1)
        for v in combo:
            term *= v
        total += term
    return total


class TestElementary:
    def test_all_ones(self):
        assert eval_elementary(2, (1, 1, 1)) == 3

    def test_top_degree(self):
        assert eval_elementary(3, XS) == 6

    def test_pairs(self):
        assert eval_elementary(2, XS) == 11

    def test_k0_and_vanishing(self):
        assert eval_elementary(0, XS) == 1
        assert eval_elementary(4, XS) == 0
        assert eval_elementary(7, XS) == 0


class TestPowerSums:
    def test_linear(self):
        assert eval_power_sum(1, XS) == 6

    def test_squares(self):
        assert eval_power_sum(2, XS) == 14

    def test_zero_vector(self):
        assert eval_power_sum(5, (0, 0, 0)) == 0

    def test_k0_rejected(self):
        with pytest.raises(ValueError):
            eval_power_sum(0, XS)


class TestWronski:
    def test_all_ones(self):
        assert eval_wronski(2, (1, 1, 1)) == 6

    def test_degree2(self):
        assert eval_wronski(2, XS) == 25

    def test_degree3(self):
        assert eval_wronski(3, XS) == 90

    def test_k0(self):
        assert eval_wronski(0, XS) == 1

    def test_no_vanishing_beyond_n(self):
        assert eval_wronski(4, XS) != 0
        assert eval_wronski(2, (1,)) == 1

    def test_recurrence_matches_multiset_definition(self):
        rng = random.Random(11)
        for _ in range(25):
            xs = [Fraction(rng.randint(-6, 6), rng.randint(1, 5))
                  for _ in range(rng.randint(1, 4))]
            for k in range(6):
                assert eval_wronski(k, xs) == wronski_by_multisets(k, xs)


class TestConversions:
    def test_degree2(self):
        assert c_from_power_sums(2, (6, 14)) == 11

    def test_degree3(self):
        assert c_from_power_sums(3, (6, 14, 36)) == 6

    def test_degree1(self):
        s1 = Fraction(-3, 7)
        assert c_from_power_sums(1, (s1,)) == s1
        assert w_from_power_sums(1, (s1,)) == s1

    def test_wronski_degree2(self):
        assert w_from_power_sums(2, (6, 14)) == 25

    def test_wronski_degree3(self):
        assert w_from_power_sums(3, (6, 14, 36)) == 90

    def test_short_input_rejected(self):
        with pytest.raises(ValueError):
            c_from_power_sums(3, (6, 14))

    def test_random_vectors(self):
        rng = random.Random(5)
        for _ in range(40):
            xs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                  for _ in range(rng.randint(1, 6))]
            s = [eval_power_sum(i, xs) for i in range(1, 9)]
            for k in range(1, 9):
                assert c_from_power_sums(k, s) == eval_elementary(k, xs)
                assert w_from_power_sums(k, s) == eval_wronski(k, xs)


class TestStructuralProperties:
    def test_degree1_coincidence(self):
        xs = (Fraction(1, 2), Fraction(-3), Fraction(5, 7))
        assert eval_elementary(1, xs) == eval_power_sum(1, xs) == eval_wronski(1, xs)

    def test_trailing_zeros_do_not_matter(self):
        xs = (Fraction(2), Fraction(-1, 3))
        padded = xs + (0, 0, 0)
        for k in range(5):
            assert eval_elementary(k, xs) == eval_elementary(k, padded)
            assert eval_wronski(k, xs) == eval_wronski(k, padded)
        for k in range(1, 5):
            assert eval_power_sum(k, xs) == eval_power_sum(k, padded)

    def test_conversion_is_trace_polynomial_evaluation(self):
        rng = random.Random(23)
        for _ in range(10):
            xs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)]
            s = [eval_power_sum(i, xs) for i in range(1, 7)]
            for k in range(1, 7):
                values = {i: s[i - 1] for i in range(1, k + 1)}
                assert c_from_power_sums(k, s) == cauchy_j(k).evaluate(values) / factorial(k)
