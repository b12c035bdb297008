"""Integer partitions, multiplicity symbols, and the class-size formula.

A partition of k is stored with weakly increasing parts.  Its multiplicity
symbol is the vector [a1, ..., ak] where a_i counts the parts equal to i;
canonically the symbol has length exactly k = sum(i * a_i).  The symbol of
a permutation cycle type indexes a conjugacy class of the symmetric group,
and ``cauchy_h`` is the exact size of that class.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Sequence

from .errors import InvalidSymbol


class Partition:
    """Weakly increasing positive parts; the empty partition has k = 0."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = sorted(int(p) for p in parts)
        if ps and ps[0] < 1:
            raise ValueError(f"parts must be positive, got {ps[0]}")
        self._parts = tuple(ps)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def k(self) -> int:
        return sum(self._parts)

    def to_symbol(self) -> "PartitionSymbol":
        counts = [0] * self.k
        for p in self._parts:
            counts[p - 1] += 1
        return PartitionSymbol(counts)

    def __iter__(self):
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other._parts

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self._parts)) + ")"


class PartitionSymbol:
    """Multiplicity vector [a1, ..., ak] with sum(i * a_i) = k.

    Trailing zeros in the input are tolerated; the stored canonical form
    has length exactly k.  Hashable, so usable as a tally key.
    """

    __slots__ = ("_mult",)

    def __init__(self, multiplicities: Iterable[int], k: int | None = None):
        ms = [int(a) for a in multiplicities]
        if any(a < 0 for a in ms):
            raise InvalidSymbol(f"multiplicities must be >= 0, got {ms}")
        total = sum(i * a for i, a in enumerate(ms, start=1))
        if k is not None and k != total:
            raise InvalidSymbol(f"symbol {ms} encodes {total}, not the declared {k}")
        while len(ms) > total:
            if ms[-1]:
                raise InvalidSymbol(f"symbol {ms} has a part larger than its total {total}")
            ms.pop()
        ms.extend([0] * (total - len(ms)))
        self._mult = tuple(ms)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return self._mult

    @property
    def k(self) -> int:
        return len(self._mult)

    def count(self, i: int) -> int:
        """Number of parts equal to i."""
        return self._mult[i - 1] if 1 <= i <= len(self._mult) else 0

    def num_parts(self) -> int:
        return sum(self._mult)

    def to_partition(self) -> Partition:
        parts = []
        for i, a in enumerate(self._mult, start=1):
            parts.extend([i] * a)
        return Partition(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartitionSymbol) and self._mult == other._mult

    def __hash__(self) -> int:
        return hash(self._mult)

    def __repr__(self) -> str:
        return f"PartitionSymbol({list(self._mult)!r})"

    def __str__(self) -> str:
        """Compact display with trailing zeros trimmed, e.g. [3,0,1,1]."""
        ms = list(self._mult)
        while len(ms) > 1 and ms[-1] == 0:
            ms.pop()
        return "[" + ",".join(map(str, ms)) + "]"


def enumerate_partitions(k: int) -> list[Partition]:
    """All partitions of k, each exactly once, lexicographic by parts.

    The order is fixed so that polynomial term generation built on top of
    it is reproducible.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    out: list[Partition] = []

    def extend(prefix: list[int], remaining: int, minimum: int) -> None:
        for first in range(minimum, remaining + 1):
            prefix.append(first)
            if first == remaining:
                out.append(Partition(prefix))
            else:
                extend(prefix, remaining - first, first)
            prefix.pop()

    extend([], k, 1)
    return out


def to_symbol(lam: Partition) -> PartitionSymbol:
    return lam.to_symbol()


def from_symbol(alpha: PartitionSymbol | Sequence[int], k: int | None = None) -> Partition:
    if not isinstance(alpha, PartitionSymbol):
        alpha = PartitionSymbol(alpha, k=k)
    elif k is not None and alpha.k != k:
        raise InvalidSymbol(f"symbol {alpha} encodes {alpha.k}, not the declared {k}")
    return alpha.to_partition()


def cauchy_h(alpha: PartitionSymbol | Sequence[int]) -> int:
    """n! / (a1! a2! ... * 1^a1 2^a2 ...) with n = sum(i * a_i).

    This is the size of the conjugacy class of cycle type alpha in the
    symmetric group on n letters; the quotient is always an exact
    integer, and a failed divisibility check signals a logic bug.
    """
    if not isinstance(alpha, PartitionSymbol):
        alpha = PartitionSymbol(alpha)
    numerator = factorial(alpha.k)
    denominator = 1
    for i, a in enumerate(alpha.multiplicities, start=1):
        denominator *= factorial(a) * i**a
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0, f"class-size formula not integral at {alpha}"
    return quotient


def sign_of_symbol(alpha: PartitionSymbol | Sequence[int]) -> int:
    """(-1) raised to the number of even-length parts: a2 + a4 + ...

    Equals the sign of any permutation with cycle type alpha.
    """
    if not isinstance(alpha, PartitionSymbol):
        alpha = PartitionSymbol(alpha)
    even = sum(a for i, a in enumerate(alpha.multiplicities, start=1) if i % 2 == 0)
    return -1 if even % 2 else 1
