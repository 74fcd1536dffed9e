# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force kernels; mirrors ``_pykernels`` exactly."""

from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

ctypedef long long i64
ctypedef unsigned long long u64

# int64 Bareiss is exact for 0/1 matrices up to this size (Hadamard bound)
cdef enum:
    MAXN = 22

MAX_MINOR_ARCS = MAXN


cdef i64 _det_small(i64 *a, int n) nogil:
    cdef int k, r, i, j
    cdef i64 sign = 1, prev = 1, akk, aik, tmp
    for k in range(n - 1):
        if a[k * MAXN + k] == 0:
            r = k + 1
            while r < n and a[r * MAXN + k] == 0:
                r += 1
            if r == n:
                return 0
            for j in range(n):
                tmp = a[k * MAXN + j]
                a[k * MAXN + j] = a[r * MAXN + j]
                a[r * MAXN + j] = tmp
            sign = -sign
        akk = a[k * MAXN + k]
        for i in range(k + 1, n):
            aik = a[i * MAXN + k]
            for j in range(k + 1, n):
                a[i * MAXN + j] = (akk * a[i * MAXN + j] - aik * a[k * MAXN + j]) // prev
        prev = akk
    return sign * a[(n - 1) * MAXN + n - 1]


def semi_principal_minor_sums(T, int m):
    cdef int N = 2 * m
    if N > MAXN:
        raise ValueError(f"compiled minor kernel handles at most {MAXN} arcs")
    cdef i64 P[MAXN][MAXN]
    cdef u64 rowmask[MAXN]
    cdef i64 sub[MAXN * MAXN]
    cdef int idx[MAXN]
    cdef i64 sums[MAXN + 1]
    cdef int i, j, q, zero_row
    cdef u64 s, t, nmask
    for i in range(N):
        rowmask[i] = 0
        for j in range(N):
            P[i][j] = T[i][(j + m) % N]
            if P[i][j]:
                rowmask[i] |= (<u64>1) << j
    for i in range(N + 1):
        sums[i] = 0
    sums[0] = 1
    nmask = (<u64>1) << N
    with nogil:
        s = 1
        while s < nmask:
            q = 0
            zero_row = 0
            t = s
            while t:
                i = __builtin_ctzll(t)
                if (rowmask[i] & s) == 0:
                    zero_row = 1
                    break
                idx[q] = i
                q += 1
                t &= t - 1
            if not zero_row:
                for i in range(q):
                    for j in range(q):
                        sub[i * MAXN + j] = P[idx[i]][idx[j]]
                sums[q] += _det_small(sub, q)
            s += 1
    return [sums[i] for i in range(N + 1)]


def closed_walk_bump_counts(tails, heads, int m, int k):
    cdef int N = 2 * m
    counts = [0] * (k + 1)
    if k < 1 or N == 0:
        return counts
    cdef int *tl = <int *>malloc(N * sizeof(int))
    cdef int *hd = <int *>malloc(N * sizeof(int))
    cdef int *inv = <int *>malloc(N * sizeof(int))
    cdef int *nsucc = <int *>malloc(N * sizeof(int))
    cdef int *succ = <int *>malloc(N * N * sizeof(int))
    cdef int *path = <int *>malloc((k + 1) * sizeof(int))
    cdef int *bumps = <int *>malloc((k + 1) * sizeof(int))
    cdef int *pos = <int *>malloc((k + 1) * sizeof(int))
    cdef i64 *c = <i64 *>malloc((k + 1) * sizeof(i64))
    cdef int a, b, start, depth, nxt, bb
    try:
        for a in range(N):
            tl[a] = tails[a]
            hd[a] = heads[a]
            inv[a] = (a + m) % N
        for a in range(N):
            nsucc[a] = 0
            for b in range(N):
                if tl[b] == hd[a]:
                    succ[a * N + nsucc[a]] = b
                    nsucc[a] += 1
        for b in range(k + 1):
            c[b] = 0
        with nogil:
            for start in range(N):
                depth = 1
                path[0] = start
                bumps[0] = 0
                pos[0] = 0
                while depth > 0:
                    a = path[depth - 1]
                    if depth == k:
                        if hd[a] == tl[start]:
                            bb = bumps[depth - 1]
                            if inv[a] == start:
                                bb += 1
                            c[bb] += 1
                        depth -= 1
                        continue
                    if pos[depth - 1] >= nsucc[a]:
                        depth -= 1
                        continue
                    nxt = succ[a * N + pos[depth - 1]]
                    pos[depth - 1] += 1
                    path[depth] = nxt
                    bumps[depth] = bumps[depth - 1] + (1 if nxt == inv[a] else 0)
                    pos[depth] = 0
                    depth += 1
        for b in range(k + 1):
            counts[b] = c[b]
    finally:
        free(tl); free(hd); free(inv); free(nsucc); free(succ)
        free(path); free(bumps); free(pos); free(c)
    return counts
