"""Linear operators on the polynomial space and the trace-polynomial sequences.

The derivation ``delta`` sends x_k to k*x_{k+1} and extends by the Leibniz
rule; on a monomial it acts slot by slot

    delta |n1, n2, ...> = sum over i with n_i > 0 of
        i * n_i * |n1, ..., n_i - 1, n_{i+1} + 1, ...>

Both raising operators x1_hat -/+ delta shift the weight grading up by one.
Iterating the minus variant from the seed x1 produces the signed sequence
j_1, j_2, ... whose evaluation at power traces yields k! times the k-th
characteristic-polynomial coefficient; the plus variant produces the
unsigned sequence whose coefficients count symmetric-group conjugacy
classes.  The same polynomials also arise in closed form as a signed sum
of class sizes over partitions, which gives two independent construction
routes to test against each other.

Operator identities that hold on this space (all verified exhaustively on
the monomial basis by the test suite):

    [d_i, x_j] = delta_ij * Id          [delta, x_j] = j * x_{j+1}
    [d_1, delta] = 0                    [d_j, delta] = (j-1) * d_{j-1}  (j >= 2)
    [d_1, minus_raising] = Id           [minus_raising, plus_raising] = -2 * x_2

and on the generated sequence, with j_0 := 1,

    d_1 j_n = n * j_{n-1}
    d_k j_n = (-1)^(k+1) * (k-1)! * C(n, k) * j_{n-k}
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Callable, Sequence

from .algebra import Monomial, Polynomial, Scalar, partial, times_var
from .partitions import PartitionSymbol, cauchy_h, enumerate_partitions, sign_of_symbol

_X1 = Monomial({1: 1})


def delta(p: Polynomial) -> Polynomial:
    """The derivation: x_k -> k * x_{k+1}, extended by Leibniz."""
    acc: dict[Monomial, Scalar] = {}
    for m, c in p.terms().items():
        exps = dict(m.pairs)
        for i, e in m.pairs:
            shifted = dict(exps)
            if e == 1:
                del shifted[i]
            else:
                shifted[i] = e - 1
            shifted[i + 1] = shifted.get(i + 1, 0) + 1
            key = Monomial(shifted)
            acc[key] = acc.get(key, 0) + c * i * e
    return Polynomial(acc)


def raising_minus(p: Polynomial) -> Polynomial:
    """x1_hat - delta; raises weight by exactly one."""
    return times_var(p, 1) - delta(p)


def raising_plus(p: Polynomial) -> Polynomial:
    """x1_hat + delta; the unsigned counterpart."""
    return times_var(p, 1) + delta(p)


@lru_cache(maxsize=None)
def cauchy_j(k: int) -> Polynomial:
    """k-th signed trace polynomial: j_1 = x1, j_{k+1} = (x1_hat - delta) j_k.

    Homogeneous of weight k.  j_0 is the constant 1, which both seeds the
    recursion (the raising step sends 1 to x1) and closes the lowering
    identities.  Results are memoized, so walking up the sequence is
    linear in total work; the cache fill is idempotent and a duplicated
    computation under a race is harmless.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return Polynomial.one()
    return raising_minus(cauchy_j(k - 1))


@lru_cache(maxsize=None)
def cauchy_k(k: int) -> Polynomial:
    """k-th unsigned polynomial: same recursion with x1_hat + delta."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return Polynomial.one()
    return raising_plus(cauchy_k(k - 1))


def monomial_from_symbol(alpha: PartitionSymbol) -> Monomial:
    """x1^a1 * x2^a2 * ... for the multiplicity vector alpha."""
    return Monomial({i: a for i, a in enumerate(alpha.multiplicities, start=1) if a})


def cauchy_j_closed(k: int) -> Polynomial:
    """The signed polynomial assembled directly from class sizes.

    Coefficient of x^alpha is sign(alpha) * h(alpha), summed over all
    partitions of k.  Built without any operator iteration, so it is an
    independent oracle for ``cauchy_j``.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return Polynomial.one()
    terms = {}
    for lam in enumerate_partitions(k):
        alpha = lam.to_symbol()
        terms[monomial_from_symbol(alpha)] = sign_of_symbol(alpha) * cauchy_h(alpha)
    return Polynomial(terms)


def cauchy_k_closed(k: int) -> Polynomial:
    """Unsigned closed form: coefficient of x^alpha is h(alpha)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return Polynomial.one()
    terms = {}
    for lam in enumerate_partitions(k):
        alpha = lam.to_symbol()
        terms[monomial_from_symbol(alpha)] = cauchy_h(alpha)
    return Polynomial(terms)


class LinearOperator:
    """A composable linear action on polynomials with a readable label."""

    __slots__ = ("_fn", "description")

    def __init__(self, fn: Callable[[Polynomial], Polynomial], description: str = "?"):
        self._fn = fn
        self.description = description

    def __call__(self, p: Polynomial) -> Polynomial:
        return self._fn(p)

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        """Composition: (A @ B)(p) = A(B(p))."""
        return LinearOperator(lambda p: self(other(p)), f"({self.description} {other.description})")

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(lambda p: self(p) + other(p), f"({self.description} + {other.description})")

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(lambda p: self(p) - other(p), f"({self.description} - {other.description})")

    def __rmul__(self, c: Scalar) -> "LinearOperator":
        return LinearOperator(lambda p: c * self(p), f"{c}*{self.description}")

    def __neg__(self) -> "LinearOperator":
        return -1 * self

    def __repr__(self) -> str:
        return f"LinearOperator({self.description})"


IDENTITY = LinearOperator(lambda p: p, "Id")
ZERO_OP = LinearOperator(lambda p: Polynomial.zero(), "0")
DELTA = LinearOperator(delta, "delta")
RAISING_MINUS = LinearOperator(raising_minus, "(x1 - delta)")
RAISING_PLUS = LinearOperator(raising_plus, "(x1 + delta)")


def var_op(i: int) -> LinearOperator:
    """Multiplication by x_i."""
    return LinearOperator(lambda p: times_var(p, i), f"x{i}")


def partial_op(i: int) -> LinearOperator:
    """Formal d/dx_i."""
    return LinearOperator(lambda p: partial(p, i), f"d{i}")


def commutator(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    """p -> A(B(p)) - B(A(p))."""
    return LinearOperator(
        lambda p: a(b(p)) - b(a(p)),
        f"[{a.description}, {b.description}]",
    )


def monomials_of_weight(w: int) -> list[Monomial]:
    """All basis monomials of weight w (multiplicity vectors of partitions of w)."""
    if w < 0:
        raise ValueError(f"weight must be >= 0, got {w}")
    if w == 0:
        return [Monomial()]
    return [monomial_from_symbol(lam.to_symbol()) for lam in enumerate_partitions(w)]


def monomials_up_to_weight(w_max: int) -> list[Monomial]:
    out: list[Monomial] = []
    for w in range(w_max + 1):
        out.extend(monomials_of_weight(w))
    return out


def op_equal_up_to_weight(a: LinearOperator, b: LinearOperator, w_max: int = 10) -> bool:
    """True iff A(m) = B(m) on every basis monomial of weight <= w_max.

    Operator equality is only decidable on a finite test basis; this is
    sufficient for the weight-graded, bounded-shift operators built here.
    """
    if w_max < 1:
        raise ValueError(f"w_max must be >= 1, got {w_max}")
    for m in monomials_up_to_weight(w_max):
        basis = Polynomial({m: 1})
        if a(basis) != b(basis):
            return False
    return True


def lowering_coefficient(n: int, k: int) -> int:
    """The exact constant in d_k j_n = const * j_{n-k}.

    Equals (-1)^(k+1) * (k-1)! * C(n, k); in particular d_1 lowers with
    constant n.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    binom = factorial(n) // (factorial(k) * factorial(n - k))
    return (-1) ** (k + 1) * factorial(k - 1) * binom
