# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels for the permutation-heavy inner loops.

Same contracts as ``symtrace._kernels_py``; the contraction kernel works
in C int64, so callers must pre-check that every intermediate fits (the
dispatcher in ``symtrace._kernels`` does this and falls back to the
pure-Python big-int path otherwise).
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

DEF MAXK = 16   # budget guard caps k well below this (k! alone <= 1e8 => k <= 11)
DEF MAXN = 64


cdef bint _next_permutation(int* a, Py_ssize_t k) noexcept:
    cdef Py_ssize_t i = k - 2
    cdef Py_ssize_t j
    cdef int tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = k - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    i += 1
    j = k - 1
    while i < j:
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        i += 1
        j -= 1
    return True


cdef int _perm_sign(const int* perm, Py_ssize_t k) noexcept:
    cdef unsigned int seen = 0
    cdef Py_ssize_t s, j
    cdef Py_ssize_t cycles = 0
    for s in range(k):
        if seen >> s & 1u:
            continue
        cycles += 1
        j = s
        while not (seen >> j & 1u):
            seen |= 1u << j
            j = perm[j]
    return -1 if (k - cycles) & 1 else 1


def antisym_raw(long long[::1] flat, Py_ssize_t n, Py_ssize_t k):
    """int64 version of the signed permutation-sum contraction."""
    if k < 1 or k > MAXK or n < 1 or n > MAXN:
        raise ValueError("antisym kernel limits exceeded")
    if flat.shape[0] != n * n:
        raise ValueError("flat entry grid must have n*n elements")

    cdef Py_ssize_t nperm = 1
    cdef Py_ssize_t i, j, pos, p
    for i in range(2, k + 1):
        nperm *= i

    cdef int* ptab = <int*>malloc(nperm * k * sizeof(int))
    cdef signed char* psign = <signed char*>malloc(nperm * sizeof(signed char))
    if ptab == NULL or psign == NULL:
        free(ptab); free(psign)
        raise MemoryError()

    cdef int perm[MAXK]
    cdef int t[MAXK]
    cdef long long grid[MAXK][MAXK]
    cdef long long total = 0, subtotal, prod
    cdef const int* row

    try:
        for i in range(k):
            perm[i] = <int>i
        p = 0
        while True:
            for i in range(k):
                ptab[p * k + i] = perm[i]
            psign[p] = <signed char>_perm_sign(perm, k)
            p += 1
            if not _next_permutation(perm, k):
                break

        memset(t, 0, sizeof(t))
        while True:
            for i in range(k):
                for j in range(k):
                    grid[i][j] = flat[t[i] * n + t[j]]
            subtotal = 0
            for p in range(nperm):
                row = ptab + p * k
                prod = 1
                for j in range(k):
                    prod *= grid[j][row[j]]
                if psign[p] > 0:
                    subtotal += prod
                else:
                    subtotal -= prod
            total += subtotal
            pos = k - 1
            while pos >= 0 and t[pos] == n - 1:
                t[pos] = 0
                pos -= 1
            if pos < 0:
                break
            t[pos] += 1
    finally:
        free(ptab)
        free(psign)
    return total


def tally_cycle_types(Py_ssize_t n):
    """Cycle-type census of all n! permutations of {0..n-1}."""
    if n < 1 or n > 15:
        raise ValueError("tally kernel supports 1 <= n <= 15")
    cdef int a[16]
    cdef int counts[16]
    cdef Py_ssize_t s, j, length
    cdef unsigned int seen
    cdef unsigned long long key
    cdef dict tally = {}
    for s in range(n):
        a[s] = <int>s
    while True:
        memset(counts, 0, sizeof(counts))
        seen = 0
        for s in range(n):
            if seen >> s & 1u:
                continue
            length = 0
            j = s
            while not (seen >> j & 1u):
                seen |= 1u << j
                j = a[j]
                length += 1
            counts[length - 1] += 1
        key = 0
        for s in range(n):
            key |= (<unsigned long long>counts[s]) << (4 * s)
        if key in tally:
            tally[key] += 1
        else:
            tally[key] = 1
        if not _next_permutation(a, n):
            break
    out = {}
    for key, v in tally.items():
        out[tuple((key >> (4 * s)) & 0xF for s in range(n))] = v
    return out
