# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled hot kernels; same contract as ``_pykernels``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt
from libc.stdint cimport int32_t, int64_t, uint64_t

cnp.import_array()

NAME = "cython"

cdef enum:
    MAXW = 4  # up to 256 vertices
    MAXDEPTH = 16
    MAXR = 16

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int64_t isqrt64(int64_t x) nogil:
    cdef int64_t t
    if x <= 0:
        return 0
    t = <int64_t>sqrt(<double>x)
    while t * t > x:
        t -= 1
    while (t + 1) * (t + 1) <= x:
        t += 1
    return t


cdef inline int64_t floordiv(int64_t a, int64_t b) nogil:
    cdef int64_t q = a // b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef struct Search:
    int r
    int64_t count
    int64_t cap
    int64_t *out
    int64_t prefix[MAXR + 1]


cdef void fill(Search *st, int pos, int64_t m, int64_t s, int64_t q) noexcept nogil:
    cdef int64_t x, t, lo, hi, c, s1, q1, m1
    cdef int k
    if m == 1:
        if s * s == q:
            st.prefix[pos] = s
            if st.out != NULL and st.count < st.cap:
                for k in range(st.r + 1):
                    st.out[st.count * (st.r + 1) + k] = st.prefix[k]
            st.count += 1
        return
    x = (m - 1) * (m * q - s * s)
    t = isqrt64(x)
    lo = floordiv(s - t - 1, m)
    hi = -floordiv(-(s + t + 1), m)
    m1 = m - 1
    c = lo
    while c <= hi:
        s1 = s - c
        q1 = q - c * c
        if q1 >= 0 and s1 * s1 <= m1 * q1 and ((s1 - q1) & 1) == 0:
            st.prefix[pos] = c
            fill(st, pos + 1, m1, s1, q1)
        c += 1


cdef int64_t run_search(Search *st, int64_t self_int, int64_t k_deg) noexcept nogil:
    cdef int64_t a = 9 - st.r
    cdef int64_t b = -k_deg
    cdef int64_t disc = st.r * (b * b - a * self_int)
    cdef int64_t t, lo, hi, d0, s, q
    st.count = 0
    if disc < 0:
        return 0
    t = isqrt64(disc)
    lo = floordiv(3 * b - t - 1, a)
    hi = -floordiv(-(3 * b + t + 1), a)
    d0 = lo
    while d0 <= hi:
        s = b - 3 * d0
        q = d0 * d0 - self_int
        if q >= 0 and s * s <= st.r * q and ((s - q) & 1) == 0:
            st.prefix[0] = d0
            fill(st, 1, st.r, s, q)
        d0 += 1
    return st.count


def solve_classes(int r, long long self_int, long long k_deg):
    cdef Search st
    if r < 1 or r > MAXR:
        raise ValueError("rank out of kernel range")
    st.r = r
    st.out = NULL
    st.cap = 0
    cdef int64_t n = run_search(&st, self_int, k_deg)
    cdef cnp.ndarray[int64_t, ndim=2] arr = np.zeros((n, r + 1), dtype=np.int64)
    if n:
        st.out = <int64_t *>arr.data
        st.cap = n
        run_search(&st, self_int, k_deg)
    return arr


cdef int load_rows(adj, uint64_t *rows, int n) except -1:
    cdef cnp.ndarray[cnp.uint8_t, ndim=2, cast=True] a = np.ascontiguousarray(adj, dtype=np.bool_)
    cdef int i, j
    for i in range(n * MAXW):
        rows[i] = 0
    for i in range(n):
        for j in range(n):
            if a[i, j]:
                rows[i * MAXW + (j >> 6)] |= (<uint64_t>1) << (j & 63)
    return 0


cdef struct Cliques:
    int n
    int words
    int target
    uint64_t *rows
    int64_t *counts
    int32_t *out
    int64_t emitted
    int prefix[MAXDEPTH]


cdef void walk(Cliques *st, uint64_t *cand, int depth) noexcept nogil:
    # cand: candidate set of vertices extending the current clique (size depth)
    cdef uint64_t nxt[MAXW]
    cdef uint64_t rest[MAXW]
    cdef uint64_t word, low, any_bits
    cdef int w, v, k, pc
    pc = 0
    for w in range(st.words):
        rest[w] = cand[w]
        pc += __builtin_popcountll(cand[w])
    if st.counts != NULL:
        st.counts[depth + 1] += pc
    if st.out != NULL and depth + 1 == st.target:
        for w in range(st.words):
            word = rest[w]
            while word:
                v = (w << 6) + __builtin_ctzll(word)
                word &= word - 1
                st.prefix[depth] = v
                for k in range(depth + 1):
                    st.out[st.emitted * st.target + k] = st.prefix[k]
                st.emitted += 1
        return
    if depth + 1 == st.target:
        return
    for w in range(st.words):
        while rest[w]:
            low = rest[w] & (~rest[w] + 1)
            v = (w << 6) + __builtin_ctzll(rest[w])
            rest[w] ^= low
            any_bits = 0
            for k in range(st.words):
                nxt[k] = rest[k] & st.rows[v * MAXW + k]
                any_bits |= nxt[k]
            if any_bits:
                st.prefix[depth] = v
                walk(st, nxt, depth + 1)


cdef void full_mask(uint64_t *cand, int n, int words) noexcept nogil:
    cdef int w
    for w in range(MAXW):
        cand[w] = 0
    for w in range(words):
        if (w + 1) * 64 <= n:
            cand[w] = <uint64_t>0xFFFFFFFFFFFFFFFF
        else:
            cand[w] = ((<uint64_t>1) << (n - w * 64)) - 1


def clique_counts(adj, int max_size):
    cdef int n = len(adj)
    if n > MAXW * 64 or max_size >= MAXDEPTH:
        raise ValueError("graph too large for compiled kernel")
    cdef cnp.ndarray[uint64_t, ndim=1] rows = np.zeros(max(n, 1) * MAXW, dtype=np.uint64)
    load_rows(adj, <uint64_t *>rows.data, n)
    cdef cnp.ndarray[int64_t, ndim=1] counts = np.zeros(max_size + 1, dtype=np.int64)
    cdef Cliques st
    cdef uint64_t cand[MAXW]
    counts[0] = 1
    if max_size == 0 or n == 0:
        return [int(c) for c in counts]
    st.n = n
    st.words = (n + 63) // 64
    st.target = max_size
    st.rows = <uint64_t *>rows.data
    st.counts = <int64_t *>counts.data
    st.out = NULL
    st.emitted = 0
    full_mask(cand, n, st.words)
    walk(&st, cand, 0)
    return [int(c) for c in counts]


def list_cliques(adj, int size):
    cdef int n = len(adj)
    if size == 0:
        return np.zeros((1, 0), dtype=np.int32)
    total = clique_counts(adj, size)[size]
    cdef cnp.ndarray[uint64_t, ndim=1] rows = np.zeros(max(n, 1) * MAXW, dtype=np.uint64)
    load_rows(adj, <uint64_t *>rows.data, n)
    cdef cnp.ndarray[cnp.int32_t, ndim=2] out = np.zeros((total, size), dtype=np.int32)
    cdef Cliques st
    cdef uint64_t cand[MAXW]
    if total == 0:
        return out
    st.n = n
    st.words = (n + 63) // 64
    st.target = size
    st.rows = <uint64_t *>rows.data
    st.counts = NULL
    st.out = <int32_t *>out.data
    st.emitted = 0
    full_mask(cand, n, st.words)
    walk(&st, cand, 0)
    return out
