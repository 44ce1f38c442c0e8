"""Pure-Python hot kernels.

Always importable; used when the compiled extension is missing and as the
reference side of the backend-equivalence tests.  Bitsets are Python ints.
"""
from __future__ import annotations

from math import isqrt

import numpy as np

NAME = "python"


def _d0_bounds(r: int, self_int: int, k_deg: int) -> range:
    # (9-r) d0^2 - 6 b d0 + (b^2 + r n) <= 0, with b = -k_deg, n = self_int
    a = 9 - r
    b = -k_deg
    disc = r * (b * b - a * self_int)
    if disc < 0:
        return range(0)
    t = isqrt(disc)
    lo = (3 * b - t - 1) // a
    hi = -((-(3 * b + t + 1)) // a)
    return range(lo, hi + 1)


def _fill(out: list, prefix: list[int], m: int, s: int, q: int) -> None:
    # prefix is extended in place; m slots remain with sum s and square-sum q
    if m == 1:
        if s * s == q:
            prefix.append(s)
            out.append(tuple(prefix))
            prefix.pop()
        return
    x = (m - 1) * (m * q - s * s)
    t = isqrt(x)
    lo = (s - t - 1) // m
    hi = -((-(s + t + 1)) // m)
    m1 = m - 1
    for c in range(lo, hi + 1):
        s1 = s - c
        q1 = q - c * c
        if q1 < 0 or s1 * s1 > m1 * q1 or (s1 - q1) & 1:
            continue
        prefix.append(c)
        _fill(out, prefix, m1, s1, q1)
        prefix.pop()


def solve_classes(r: int, self_int: int, k_deg: int) -> np.ndarray:
    """All (d0, c_1..c_r) with D^2 = self_int and D.K = k_deg, lexicographic."""
    out: list[tuple[int, ...]] = []
    b = -k_deg
    for d0 in _d0_bounds(r, self_int, k_deg):
        s = b - 3 * d0
        q = d0 * d0 - self_int
        if q < 0 or s * s > r * q or (s - q) & 1:
            continue
        _fill(out, [d0], r, s, q)
    arr = np.array(out, dtype=np.int64)
    return arr.reshape(len(out), r + 1)


def _bit_rows(adj: np.ndarray) -> list[int]:
    rows = []
    for row in np.asarray(adj, dtype=bool):
        mask = 0
        for j in np.flatnonzero(row):
            mask |= 1 << int(j)
        rows.append(mask)
    return rows


def clique_counts(adj: np.ndarray, max_size: int) -> list[int]:
    """counts[s] = number of s-cliques for 0 <= s <= max_size (counts[0] = 1)."""
    n = len(adj)
    rows = _bit_rows(adj)
    counts = [0] * (max_size + 1)
    counts[0] = 1
    if max_size == 0:
        return counts

    def walk(cand: int, depth: int) -> None:
        counts[depth + 1] += cand.bit_count()
        if depth + 1 == max_size:
            return
        c = cand
        while c:
            low = c & -c
            c ^= low
            nxt = c & rows[low.bit_length() - 1]
            if nxt:
                walk(nxt, depth + 1)

    walk((1 << n) - 1, 0)
    return counts


def list_cliques(adj: np.ndarray, size: int) -> np.ndarray:
    """All cliques with ``size`` vertices as sorted index rows, lexicographic."""
    n = len(adj)
    rows = _bit_rows(adj)
    out: list[tuple[int, ...]] = []
    if size == 0:
        return np.zeros((1, 0), dtype=np.int32)
    prefix: list[int] = []

    def walk(cand: int) -> None:
        c = cand
        last = len(prefix) + 1 == size
        while c:
            low = c & -c
            c ^= low
            i = low.bit_length() - 1
            prefix.append(i)
            if last:
                out.append(tuple(prefix))
            else:
                nxt = c & rows[i]
                if nxt:
                    walk(nxt)
            prefix.pop()

    walk((1 << n) - 1)
    arr = np.array(out, dtype=np.int32)
    return arr.reshape(len(out), size)
