"""The three classical symmetric-function families and their conversions.

Evaluations are exact over rationals.  ``eval_elementary`` follows the
defining sum over strictly increasing index tuples; ``eval_wronski`` (the
complete homogeneous family) uses the Newton-style recurrence because the
number of weakly increasing tuples explodes.  The conversion functions
express the elementary and Wronski values as polynomials in power sums,
with coefficients h(alpha)/k!, signed for the elementary family and
unsigned for the Wronski family.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Sequence

from .algebra import Scalar
from .partitions import cauchy_h, enumerate_partitions, sign_of_symbol

VariableVector = Sequence[Scalar]


def eval_elementary(k: int, xs: VariableVector) -> Fraction:
    """Sum of products over strictly increasing index k-tuples.

    0 for k > len(xs); 1 for k = 0.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    values = [Fraction(x) for x in xs]
    total = Fraction(0)
    for combo in combinations(values, k):
        term = Fraction(1)
        for v in combo:
            term *= v
        total += term
    return total


def eval_power_sum(k: int, xs: VariableVector) -> Fraction:
    """x1^k + x2^k + ... + xn^k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return sum((Fraction(x) ** k for x in xs), Fraction(0))


def eval_wronski(k: int, xs: VariableVector) -> Fraction:
    """Sum of products over weakly increasing index k-tuples; 1 for k = 0.

    Computed through the power-sum recurrence
    m * w_m = sum_{i=1..m} s_i * w_{m-i}, which agrees with the multiset
    definition (the small cases are pinned directly in the tests).
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return Fraction(1)
    s = [eval_power_sum(i, xs) for i in range(1, k + 1)]
    w = [Fraction(1)]
    for m in range(1, k + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            acc += s[i - 1] * w[m - i]
        w.append(acc / m)
    return w[k]


def _from_power_sums(k: int, s: Sequence[Scalar], signed: bool) -> Fraction:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if len(s) < k:
        raise ValueError(f"need power sums s_1..s_{k}, got {len(s)} values")
    values = [Fraction(v) for v in s[:k]]
    total = Fraction(0)
    for lam in enumerate_partitions(k):
        alpha = lam.to_symbol()
        coeff = Fraction(cauchy_h(alpha), factorial(k))
        if signed:
            coeff *= sign_of_symbol(alpha)
        term = coeff
        for i, a in enumerate(alpha.multiplicities, start=1):
            if a:
                term *= values[i - 1] ** a
        total += term
    return total


def c_from_power_sums(k: int, s: Sequence[Scalar]) -> Fraction:
    """Elementary value from power sums: the signed h(alpha)/k! expansion."""
    return _from_power_sums(k, s, signed=True)


def w_from_power_sums(k: int, s: Sequence[Scalar]) -> Fraction:
    """Wronski value from power sums: the same expansion without signs."""
    return _from_power_sums(k, s, signed=False)
