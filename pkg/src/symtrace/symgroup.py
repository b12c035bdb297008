"""Brute-force symmetric-group census.

Ground truth for conjugacy-class sizes: every permutation of S_n is
enumerated and tallied by cycle type.  No counting formula is used here,
which is the whole point; the result cross-checks ``partitions.cauchy_h``
and the coefficients of the unsigned trace polynomials.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable

from . import _kernels
from .errors import BudgetExceeded
from .partitions import PartitionSymbol

#: Default enumeration ceiling: 9! = 362880 permutations.
DEFAULT_MAX_N = 9


class Permutation:
    """A bijection on {1..n}, stored as the tuple of images."""

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(v) for v in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        self._images = imgs

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    def __len__(self) -> int:
        return len(self._images)

    def __call__(self, i: int) -> int:
        return self._images[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)!r})"

    def sign(self) -> int:
        """Parity by naive inversion count."""
        inv = 0
        imgs = self._images
        for i in range(len(imgs)):
            for j in range(i):
                if imgs[j] > imgs[i]:
                    inv += 1
        return -1 if inv % 2 else 1


def cycle_type(p: Permutation) -> PartitionSymbol:
    """Multiplicity symbol of p's cycle decomposition (fixed points are 1-cycles)."""
    n = len(p)
    counts = [0] * n
    seen = [False] * (n + 1)
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p(j)
            length += 1
        counts[length - 1] += 1
    return PartitionSymbol(counts)


def class_sizes(n: int, max_n: int = DEFAULT_MAX_N) -> dict[PartitionSymbol, int]:
    """Exhaustive tally of cycle types over all n! permutations.

    Raises BudgetExceeded above the ceiling (raise ``max_n`` explicitly
    to enumerate larger groups; S_10 is 3.6M permutations).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise BudgetExceeded(
            f"enumerating S_{n} needs {factorial(n)} permutations; ceiling is n <= {max_n}"
        )
    raw = _kernels.tally_cycle_types(n)
    return {PartitionSymbol(counts): size for counts, size in raw.items()}
