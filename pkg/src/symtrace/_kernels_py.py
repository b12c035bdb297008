"""Pure-Python implementations of the two enumeration-heavy kernels.

Arithmetic is on Python ints (arbitrary precision), so there is no
overflow concern here; this backend is the correctness reference and the
fallback when the compiled extension is unavailable.
"""

from __future__ import annotations

from itertools import permutations, product


def permutation_sign(perm) -> int:
    """Sign of a permutation of 0..k-1, by cycle count."""
    k = len(perm)
    seen = 0
    cycles = 0
    for s in range(k):
        if seen >> s & 1:
            continue
        cycles += 1
        j = s
        while not seen >> j & 1:
            seen |= 1 << j
            j = perm[j]
    return -1 if (k - cycles) % 2 else 1


def antisym_raw(flat: list, n: int, k: int):
    """Signed permutation-sum contraction over an n*n entry grid.

    Returns sum over all permutations s of {0..k-1} and all index tuples
    t in {0..n-1}^k of sign(s) * prod_j entry[t[j], t[s[j]]].  This is
    the raw numerator of the k-th prodeterminant: divide by k! (and any
    denominator clearing) to get the invariant.  Deliberately a literal
    double enumeration; no trace identities are used.
    """
    rows = [flat[r * n:(r + 1) * n] for r in range(n)]
    signed = [(permutation_sign(p), p) for p in permutations(range(k))]
    total = 0
    for t in product(range(n), repeat=k):
        # k x k lookup grid for this tuple, shared by all permutations
        grid = [[rows[a][b] for b in t] for a in t]
        subtotal = 0
        for sgn, perm in signed:
            p = 1
            for j in range(k):
                p *= grid[j][perm[j]]
            subtotal += p if sgn == 1 else -p
        total += subtotal
    return total


def tally_cycle_types(n: int) -> dict:
    """Cycle-type census of all n! permutations of {0..n-1}.

    Returns a mapping from the multiplicity tuple (a1, ..., an), where
    a_i counts i-cycles, to the number of permutations with that type.
    Enumeration is exhaustive and lexicographic.
    """
    tally: dict = {}
    for p in permutations(range(n)):
        counts = [0] * n
        seen = 0
        for s in range(n):
            if seen >> s & 1:
                continue
            length = 0
            j = s
            while not seen >> j & 1:
                seen |= 1 << j
                j = p[j]
                length += 1
            counts[length - 1] += 1
        key = tuple(counts)
        tally[key] = tally.get(key, 0) + 1
    return tally
