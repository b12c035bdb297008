"""Exact dense matrices and their trace invariants.

Two families are computed: power traces I_k = tr(A^k) and the
characteristic-polynomial coefficients J_k ("prodeterminants"), the
latter by four mutually independent algorithms:

  * ``prodet_minors``      sum of all principal k x k minor determinants
  * ``prodet_leverrier``   the Faddeev-LeVerrier matrix recurrence
  * ``prodet_cauchy``      evaluate the k-th signed trace polynomial at
                           (I_1, ..., I_k) and divide by k!
  * ``prodet_antisym``     brute-force signed permutation-sum contraction

All determinants go through fraction-free Bareiss elimination on integer
rows obtained by clearing denominators row by row (each row's lcm divides
back out of the result).  A naive rational Gaussian elimination is kept
alongside as a cross-check path.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from math import factorial, lcm
from typing import Sequence

from . import _kernels
from .algebra import Scalar, parse_rational
from .errors import BudgetExceeded, DimensionError, ParseError
from .operators import cauchy_j

#: Work ceiling for the brute-force contraction: k! * n^k terms.
ANTISYM_BUDGET = 10**8


class ExactMatrix:
    """Square matrix of exact rationals; immutable after construction."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        n = len(rows)
        if n < 1:
            raise DimensionError("matrix must be at least 1x1")
        grid = []
        for r in rows:
            row = tuple(Fraction(x) for x in r)
            if len(row) != n:
                raise DimensionError(f"expected {n} columns, got {len(row)}")
            grid.append(row)
        self.n = n
        self.rows = tuple(grid)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __repr__(self) -> str:
        return f"ExactMatrix({[[str(x) for x in row] for row in self.rows]})"

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix([
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix([
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        n = self.n
        cols = list(zip(*other.rows))
        return ExactMatrix([
            [sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows
        ])

    def scale(self, c: Scalar) -> "ExactMatrix":
        return ExactMatrix([[c * x for x in row] for row in self.rows])

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.n)), Fraction(0))

    def submatrix(self, indices: Sequence[int]) -> "ExactMatrix":
        """Principal submatrix on the given row/column indices (0-based)."""
        return ExactMatrix([[self.rows[i][j] for j in indices] for i in indices])

    def determinant(self) -> Fraction:
        return _det_bareiss(self.rows)

    def inverse(self) -> "ExactMatrix":
        """Exact inverse by Gauss-Jordan; raises DimensionError if singular."""
        n = self.n
        aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col]), None)
            if pivot is None:
                raise DimensionError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return ExactMatrix([row[n:] for row in aug])

    def conjugate_by(self, g: "ExactMatrix") -> "ExactMatrix":
        """g @ self @ g^-1."""
        return g @ self @ g.inverse()

    def _check_same(self, other: "ExactMatrix") -> None:
        if not isinstance(other, ExactMatrix):
            raise TypeError(f"expected ExactMatrix, got {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")


# ---------------------------------------------------------------------
# Determinants
# ---------------------------------------------------------------------

def _integerize_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Clear denominators row by row; returns (integer grid, product of row lcms)."""
    grid = []
    scale = 1
    for row in rows:
        mult = lcm(*(x.denominator for x in row)) if row else 1
        scale *= mult
        grid.append([int(x * mult) for x in row])
    return grid, scale


def _det_int_bareiss(m: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination; mutates its argument."""
    n = len(m)
    sign = 1
    prev = 1
    for c in range(n - 1):
        if not m[c][c]:
            pivot = next((r for r in range(c + 1, n) if m[r][c]), None)
            if pivot is None:
                return 0
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                # exact by the Desnanot-Jacobi identity
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) // prev
            m[i][c] = 0
        prev = m[c][c]
    return sign * m[n - 1][n - 1]


def _det_bareiss(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    grid, scale = _integerize_rows(rows)
    return Fraction(_det_int_bareiss(grid), scale)


def _det_gauss(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Naive rational Gaussian elimination; cross-check for the Bareiss path."""
    m = [list(row) for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


# ---------------------------------------------------------------------
# Invariants
# ---------------------------------------------------------------------

def power_trace(a: ExactMatrix, k: int) -> Fraction:
    """I_k = tr(A^k)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return power_traces(a, k)[k - 1]


def power_traces(a: ExactMatrix, k_max: int) -> list[Fraction]:
    """[I_1, ..., I_kmax] with one running matrix power."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    out = [a.trace()]
    power = a
    for _ in range(k_max - 1):
        power = power @ a
        out.append(power.trace())
    return out


def prodet_minors(a: ExactMatrix, k: int) -> Fraction:
    """J_k as the sum of all C(n, k) principal k x k minor determinants."""
    _check_k(a, k)
    total = Fraction(0)
    for indices in combinations(range(a.n), k):
        total += a.submatrix(indices).determinant()
    return total


def prodet_leverrier(a: ExactMatrix, k: int) -> Fraction:
    """J_k by the Faddeev-LeVerrier recurrence.

    M_1 = A; J_m = tr(M_m)/m; M_{m+1} = A (J_m I - M_m).  The division by
    m is exact over the rationals, so intermediates stay rational even on
    integer input.
    """
    _check_k(a, k)
    return _leverrier_sequence(a, k)[k - 1]


def _leverrier_sequence(a: ExactMatrix, k_max: int) -> list[Fraction]:
    ident = ExactMatrix.identity(a.n)
    m = a
    out = [m.trace()]
    for step in range(2, k_max + 1):
        m = a @ (ident.scale(out[-1]) - m)
        out.append(m.trace() / step)
    return out


def prodet_cauchy(a: ExactMatrix, k: int) -> Fraction:
    """J_k = j_k(I_1, ..., I_k) / k!.

    Defined for every k >= 1: for k > n the value is identically 0
    (the characteristic polynomial has degree n), which makes the k = n+1
    case a sharp consistency check rather than an input error.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    traces = power_traces(a, k)
    values = {i: traces[i - 1] for i in range(1, k + 1)}
    return cauchy_j(k).evaluate(values) / factorial(k)


def prodet_antisym(a: ExactMatrix, k: int, budget: int = ANTISYM_BUDGET) -> Fraction:
    """J_k by the brute-force antisymmetrized sum.

    (1/k!) * sum over permutations s of S_k, with sign, of the full
    Einstein contraction of k matrix entries.  Denominators are cleared
    once so the enumeration runs over integers; cost is k! * n^k terms
    and the call refuses budgets above ``budget``.
    """
    _check_k(a, k)
    n = a.n
    work = factorial(k) * n**k
    if work > budget:
        raise BudgetExceeded(
            f"antisym contraction needs {work} terms for n={n}, k={k}; budget is {budget}"
        )
    denom = lcm(*(x.denominator for row in a.rows for x in row))
    flat = [int(x * denom) for row in a.rows for x in row]
    raw = _kernels.antisym_raw(flat, n, k)
    return Fraction(raw, factorial(k) * denom**k)


def lax_trace_check(m: ExactMatrix, b: ExactMatrix, k: int) -> Fraction:
    """tr([M, B] M^(k-1)) - identically zero by trace cyclicity.

    The exact value is returned so callers can assert the vanishing.
    """
    m._check_same(b)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    comm = (m @ b) - (b @ m)
    prod = comm
    for _ in range(k - 1):
        prod = prod @ m
    return prod.trace()


def _check_k(a: ExactMatrix, k: int) -> None:
    if not 1 <= k <= a.n:
        raise DimensionError(f"need 1 <= k <= n={a.n}, got k={k}")


# ---------------------------------------------------------------------
# Matrix file format
# ---------------------------------------------------------------------

def matrix_from_json(text: str) -> ExactMatrix:
    """Parse the on-disk matrix document.

    The document is a JSON object with fields ``n`` (integer) and
    ``entries`` (row-major array of arrays whose elements are rational
    strings like "3" or "-7/2"; plain integers are also accepted).
    Floats are rejected: exactness is contractual.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("matrix document must be a JSON object")
    n = doc.get("n")
    entries = doc.get("entries")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("field 'n' must be a positive integer")
    if not isinstance(entries, list) or len(entries) != n:
        raise ParseError(f"field 'entries' must be an array of {n} rows")
    rows = []
    for r, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"row {r} must be an array of {n} entries")
        parsed = []
        for c, cell in enumerate(row):
            if isinstance(cell, bool) or isinstance(cell, float):
                raise ParseError(f"entry ({r},{c}) must be a rational string, not a float/bool")
            if isinstance(cell, int):
                parsed.append(Fraction(cell))
            elif isinstance(cell, str):
                parsed.append(parse_rational(cell))
            else:
                raise ParseError(f"entry ({r},{c}) has unsupported type {type(cell).__name__}")
        rows.append(parsed)
    return ExactMatrix(rows)


def matrix_to_json(a: ExactMatrix) -> str:
    doc = {"n": a.n, "entries": [[str(x) for x in row] for row in a.rows]}
    return json.dumps(doc, indent=2)
