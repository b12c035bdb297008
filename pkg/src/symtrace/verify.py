"""Cross-oracle verification suite.

Every computation in the package has at least one independent route, and
this module runs them against each other on seeded random inputs: the
two polynomial constructions, the conversion identities, the four
prodeterminant algorithms, the class-size census, the operator brackets,
and the conserved-trace identity.  The CLI ``verify`` subcommand is a
thin front end over ``run_checks``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import symfun
from .matrices import (
    ExactMatrix,
    lax_trace_check,
    power_traces,
    prodet_antisym,
    prodet_cauchy,
    prodet_leverrier,
    prodet_minors,
)
from .operators import (
    DELTA,
    IDENTITY,
    cauchy_j,
    cauchy_j_closed,
    cauchy_k,
    commutator,
    monomial_from_symbol,
    op_equal_up_to_weight,
    partial_op,
    var_op,
)
from .algebra import partial
from .partitions import cauchy_h, enumerate_partitions, sign_of_symbol
from .symgroup import class_sizes


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


# -- seeded input generators ------------------------------------------

def random_int_matrix(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> ExactMatrix:
    return ExactMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def random_rational_matrix(rng: random.Random, n: int) -> ExactMatrix:
    return ExactMatrix([
        [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
        for _ in range(n)
    ])


def random_invertible_int_matrix(rng: random.Random, n: int) -> ExactMatrix:
    while True:
        g = random_int_matrix(rng, n)
        if g.determinant():
            return g


def random_rational_vector(rng: random.Random, length: int) -> list[Fraction]:
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(length)]


# -- individual checks ------------------------------------------------

def check_polynomials(max_k: int, seed: int) -> CheckResult:
    """Iterative vs closed construction, sign law, unsigned coefficients."""
    for k in range(1, max_k + 1):
        if cauchy_j_closed(k) != cauchy_j(k):
            return CheckResult("polynomials", False, f"closed form disagrees at k={k}")
        jk, kk = cauchy_j(k), cauchy_k(k)
        for lam in enumerate_partitions(k):
            alpha = lam.to_symbol()
            m = monomial_from_symbol(alpha)
            expected = sign_of_symbol(alpha) * cauchy_h(alpha)
            if jk.coefficient(m) != expected:
                return CheckResult("polynomials", False, f"signed coefficient off at k={k}, {alpha}")
            if kk.coefficient(m) != cauchy_h(alpha):
                return CheckResult("polynomials", False, f"unsigned coefficient off at k={k}, {alpha}")
    return CheckResult("polynomials", True, f"both constructions agree for k <= {max_k}")


def check_symfun(max_k: int, seed: int, samples: int = 50) -> CheckResult:
    """Power-sum expansions reproduce direct evaluation on random vectors."""
    rng = random.Random(seed)
    kmax = min(max_k, 8)
    for _ in range(samples):
        xs = random_rational_vector(rng, rng.randint(1, 6))
        s = [symfun.eval_power_sum(i, xs) for i in range(1, kmax + 1)]
        for k in range(1, kmax + 1):
            if symfun.c_from_power_sums(k, s) != symfun.eval_elementary(k, xs):
                return CheckResult("symfun", False, f"elementary conversion off at k={k}, xs={xs}")
            if symfun.w_from_power_sums(k, s) != symfun.eval_wronski(k, xs):
                return CheckResult("symfun", False, f"wronski conversion off at k={k}, xs={xs}")
    return CheckResult("symfun", True, f"{samples} random vectors, k <= {kmax}")


def check_matrices(max_n: int, seed: int, samples: int = 30) -> CheckResult:
    """Four-way prodeterminant agreement plus the k = n+1 vanishing."""
    rng = random.Random(seed)
    for i in range(samples):
        n = (i % max_n) + 1
        a = random_int_matrix(rng, n) if i % 2 else random_rational_matrix(rng, n)
        for k in range(1, n + 1):
            j_minors = prodet_minors(a, k)
            for name, fn in (("leverrier", prodet_leverrier),
                             ("cauchy", prodet_cauchy),
                             ("antisym", prodet_antisym)):
                got = fn(a, k)
                if got != j_minors:
                    return CheckResult(
                        "matrices", False,
                        f"{name} disagrees with minors at n={n}, k={k}: {got} vs {j_minors}")
        if prodet_cauchy(a, n + 1) != 0:
            return CheckResult("matrices", False, f"J_(n+1) not zero at n={n}")
    return CheckResult("matrices", True, f"{samples} matrices, n <= {max_n}, all k")


def check_similarity(max_n: int, seed: int, samples: int = 20) -> CheckResult:
    """J_k and I_k are conjugation invariants."""
    rng = random.Random(seed)
    n_cap = min(max_n, 4)
    for i in range(samples):
        n = (i % n_cap) + 1
        a = random_int_matrix(rng, n)
        g = random_invertible_int_matrix(rng, n)
        conj = a.conjugate_by(g)
        if power_traces(conj, n) != power_traces(a, n):
            return CheckResult("similarity", False, f"power trace changed, n={n}")
        for k in range(1, n + 1):
            if prodet_minors(conj, k) != prodet_minors(a, k):
                return CheckResult("similarity", False, f"J_{k} changed, n={n}")
    return CheckResult("similarity", True, f"{samples} conjugations, n <= {n_cap}")


def check_lax(max_n: int, seed: int, samples: int = 25) -> CheckResult:
    """tr([M, B] M^(k-1)) vanishes identically."""
    rng = random.Random(seed)
    for i in range(samples):
        n = (i % max_n) + 1
        m = random_rational_matrix(rng, n)
        b = random_rational_matrix(rng, n)
        for k in range(1, n + 1):
            value = lax_trace_check(m, b, k)
            if value != 0:
                return CheckResult("lax", False, f"nonzero {value} at n={n}, k={k}")
    return CheckResult("lax", True, f"{samples} pairs, n <= {max_n}")


def check_classes(max_k: int, seed: int) -> CheckResult:
    """Formula class sizes match the exhaustive census; coefficients match too."""
    n_cap = min(max_k, 6)
    for n in range(1, n_cap + 1):
        census = class_sizes(n)
        if sum(census.values()) != factorial(n):
            return CheckResult("classes", False, f"census of S_{n} does not total n!")
        kn = cauchy_k(n)
        for lam in enumerate_partitions(n):
            alpha = lam.to_symbol()
            if census.get(alpha) != cauchy_h(alpha):
                return CheckResult("classes", False, f"census vs formula off at n={n}, {alpha}")
            if kn.coefficient(monomial_from_symbol(alpha)) != cauchy_h(alpha):
                return CheckResult("classes", False, f"generating coefficient off at n={n}, {alpha}")
    return CheckResult("classes", True, f"exhaustive census matches formula for n <= {n_cap}")


def check_operators(max_k: int, seed: int, w_max: int = 6) -> CheckResult:
    """Bracket relations on the monomial basis and the lowering identity."""
    for i in range(1, w_max + 1):
        for j in range(1, w_max + 1):
            expected = IDENTITY if i == j else (0 * IDENTITY)
            if not op_equal_up_to_weight(commutator(partial_op(i), var_op(j)), expected, w_max):
                return CheckResult("operators", False, f"[d{i}, x{j}] wrong")
        if not op_equal_up_to_weight(commutator(DELTA, var_op(i)), i * var_op(i + 1), w_max):
            return CheckResult("operators", False, f"[delta, x{i}] wrong")
    for n in range(2, max_k + 1):
        if partial(cauchy_j(n), 1) != n * cauchy_j(n - 1):
            return CheckResult("operators", False, f"d1 lowering fails at n={n}")
    return CheckResult("operators", True, f"brackets on weight <= {w_max}, lowering to n = {max_k}")


ALL_CHECKS = {
    "polynomials": lambda max_k, max_n, seed: check_polynomials(max_k, seed),
    "symfun": lambda max_k, max_n, seed: check_symfun(max_k, seed),
    "matrices": lambda max_k, max_n, seed: check_matrices(max_n, seed),
    "similarity": lambda max_k, max_n, seed: check_similarity(max_n, seed),
    "lax": lambda max_k, max_n, seed: check_lax(max_n, seed),
    "classes": lambda max_k, max_n, seed: check_classes(max_k, seed),
    "operators": lambda max_k, max_n, seed: check_operators(max_k, seed),
}


def run_checks(names=None, max_k: int = 8, max_n: int = 5, seed: int = 0) -> list[CheckResult]:
    if names is None:
        names = list(ALL_CHECKS)
    unknown = [n for n in names if n not in ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return [ALL_CHECKS[name](max_k, max_n, seed) for name in names]
