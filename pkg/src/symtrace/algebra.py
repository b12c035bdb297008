"""Sparse multivariate polynomials over exact rationals.

The ambient space is the set of finite polynomials in countably many
variables x1, x2, x3, ... with arbitrary-precision rational coefficients.
A monomial stores only its nonzero exponents; a polynomial stores only its
nonzero coefficients, so structural equality coincides with mathematical
equality.  Every value is immutable and every operation is a pure function,
so values can be shared freely between threads.

Variables are indexed from 1.  The grading used throughout the package is
the *weight* of a monomial, ``sum(i * e_i)`` over its exponents, under
which the generated trace polynomials are homogeneous.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import MissingAssignment, ParseError

# All coefficients and matrix entries in the package are exact rationals.
# fractions.Fraction already maintains the canonical form we need
# (positive denominator, gcd 1, arbitrary precision).
Rational = Fraction

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal like ``"3"`` or ``"-7/2"``.

    Only integer and integer/integer forms are accepted; decimal or
    exponent notation is rejected to keep exactness contractual.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"not an exact rational literal: {text!r}")
    return Fraction(s)


def format_rational(value: Scalar) -> str:
    """Render a rational as ``"3"`` or ``"-7/2"`` (inverse of parse_rational)."""
    return str(Fraction(value))


class Monomial:
    """A product of variable powers, e.g. x1^2*x3.

    Stored as a sorted tuple of (variable index, exponent) pairs with all
    exponents positive; the empty tuple is the constant monomial 1.
    """

    __slots__ = ("_pairs",)

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        pairs = []
        for i, e in items:
            if i < 1:
                raise ValueError(f"variable index must be >= 1, got {i}")
            if e < 0:
                raise ValueError(f"exponent must be >= 0, got {e} for x{i}")
            if e:
                pairs.append((int(i), int(e)))
        pairs.sort()
        for (a, _), (b, _) in zip(pairs, pairs[1:]):
            if a == b:
                raise ValueError(f"duplicate variable index {a}")
        self._pairs = tuple(pairs)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return self._pairs

    def exponent(self, i: int) -> int:
        for j, e in self._pairs:
            if j == i:
                return e
        return 0

    def weight(self) -> int:
        """The grading sum(i * e_i); 0 for the constant monomial."""
        return sum(i * e for i, e in self._pairs)

    def degree(self) -> int:
        return sum(e for _, e in self._pairs)

    def is_constant(self) -> bool:
        return not self._pairs

    def variables(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self._pairs)

    def max_variable(self) -> int:
        return self._pairs[-1][0] if self._pairs else 0

    def dense_exponents(self) -> tuple[int, ...]:
        """Exponents as (e1, e2, ..., e_maxvar), zeros included."""
        out = [0] * self.max_variable()
        for i, e in self._pairs:
            out[i - 1] = e
        return tuple(out)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        merged = dict(self._pairs)
        for i, e in other._pairs:
            merged[i] = merged.get(i, 0) + e
        return Monomial(merged)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __repr__(self) -> str:
        return f"Monomial({dict(self._pairs)!r})"

    def __str__(self) -> str:
        if not self._pairs:
            return "1"
        return "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in self._pairs)


#: The constant monomial 1.
ONE = Monomial()


def _sort_key(m: Monomial):
    # Graded order: weight ascending, ties by descending lexicographic
    # comparison of dense exponent sequences.  Within a fixed weight no
    # dense sequence is a prefix of another, so the comparison is total.
    return (m.weight(), tuple(-e for e in m.dense_exponents()))


class Polynomial:
    """Immutable sparse polynomial: a mapping from Monomial to Rational.

    Zero coefficients are never stored, so two polynomials are equal
    exactly when their term mappings are equal.  The zero polynomial is
    the empty mapping.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            if not isinstance(m, Monomial):
                raise TypeError(f"term key must be a Monomial, got {type(m).__name__}")
            c = Fraction(c)
            if c:
                new = acc.get(m, _ZERO) + c
                if new:
                    acc[m] = new
                elif m in acc:
                    del acc[m]
        self._terms = acc

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return _P_ZERO

    @classmethod
    def one(cls) -> "Polynomial":
        return _P_ONE

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def variable(cls, i: int) -> "Polynomial":
        """The polynomial x_i."""
        return cls({Monomial({i: 1}): 1})

    # -- inspection ---------------------------------------------------

    def terms(self) -> dict[Monomial, Fraction]:
        """A copy of the term mapping."""
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in display order (graded, then descending lex)."""
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, _ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def weights(self) -> set[int]:
        return {m.weight() for m in self._terms}

    def weight(self) -> int | None:
        """Maximum weight of any term, or None for the zero polynomial."""
        return max((m.weight() for m in self._terms), default=None)

    def is_homogeneous(self) -> bool:
        """True when all terms share one weight (vacuously true for 0)."""
        return len(self.weights()) <= 1

    def max_variable(self) -> int:
        return max((m.max_variable() for m in self._terms), default=0)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            new = acc.get(m, _ZERO) + c
            if new:
                acc[m] = new
            elif m in acc:
                del acc[m]
        return _wrap(acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return _wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return _P_ZERO
            return _wrap({m: c * v for m, v in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                new = acc.get(m, _ZERO) + c1 * c2
                if new:
                    acc[m] = new
                elif m in acc:
                    del acc[m]
        return _wrap(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = _P_ONE
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def __str__(self) -> str:
        return render_polynomial(self)

    # -- evaluation ---------------------------------------------------

    def evaluate(self, values: Mapping[int, Scalar]) -> Fraction:
        """Exact substitution of rationals for variables.

        Raises MissingAssignment when a variable occurring in the
        polynomial has no value.
        """
        total = _ZERO
        for m, c in self._terms.items():
            term = c
            for i, e in m.pairs:
                if i not in values:
                    raise MissingAssignment(f"no value assigned to x{i}")
                term *= Fraction(values[i]) ** e
            total += term
        return total


_ZERO = Fraction(0)


def _wrap(terms: dict[Monomial, Fraction]) -> Polynomial:
    # Internal fast constructor: terms is already canonical.
    p = object.__new__(Polynomial)
    p._terms = terms
    return p


_P_ZERO = _wrap({})
_P_ONE = _wrap({ONE: Fraction(1)})


# ---------------------------------------------------------------------
# Operation-style API (thin wrappers used by the operator layer and CLI).
# ---------------------------------------------------------------------

def add(p: Polynomial, q: Polynomial) -> Polynomial:
    """Termwise sum in canonical form."""
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Distributed product; exponents add componentwise."""
    return p * q


def times_var(p: Polynomial, i: int) -> Polynomial:
    """Multiplication by x_i: every monomial's exponent at i is incremented."""
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    xi = Monomial({i: 1})
    return _wrap({m * xi: c for m, c in p._terms.items()})


def partial(p: Polynomial, i: int) -> Polynomial:
    """Formal partial derivative with respect to x_i."""
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    acc: dict[Monomial, Fraction] = {}
    for m, c in p._terms.items():
        e = m.exponent(i)
        if not e:
            continue
        d = dict(m.pairs)
        if e == 1:
            del d[i]
        else:
            d[i] = e - 1
        key = Monomial(d)
        new = acc.get(key, _ZERO) + c * e
        if new:
            acc[key] = new
        elif key in acc:
            del acc[key]
    return _wrap(acc)


def weight(m: Monomial) -> int:
    """The grading sum(i * e_i) of a monomial."""
    return m.weight()


def evaluate(p: Polynomial, values: Mapping[int, Scalar]) -> Fraction:
    return p.evaluate(values)


def render_polynomial(p: Polynomial) -> str:
    """Plain-text form, e.g. ``x1^3 - 3*x1*x2 + 2*x3``.

    Terms are joined by " + "/" - " in graded order (weight ascending,
    ties by descending lexicographic exponent sequence); exponent 1 and
    unit coefficients are omitted.  This exact format is the CLI's
    plain-text contract.
    """
    if p.is_zero():
        return "0"
    pieces = []
    for idx, (m, c) in enumerate(p.sorted_terms()):
        mag = abs(c)
        if m.is_constant():
            body = str(mag)
        elif mag == 1:
            body = str(m)
        else:
            body = f"{mag}*{m}"
        if idx == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{' + ' if c > 0 else ' - '}{body}")
    return "".join(pieces)
