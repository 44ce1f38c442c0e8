"""Compare the compiled and pure-Python kernels on the hot paths.

    python3 benchmarks/bench_kernels.py [--repeat N] [--r R ...]

Both backends are run on identical inputs and their outputs are compared
before any timing is reported.
"""
from __future__ import annotations

import argparse
import sys
import timeit

import numpy as np

from delpezzo import _pykernels, kernels
from delpezzo.gosset import polytope

CLASS_PARAMS = [("lines", -1, -1), ("rulings", 0, -2), ("exceptional systems", 1, -3), ("3-divisors", -3, -3)]


def _best(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def run(ranks, repeat: int) -> list[tuple]:
    compiled = kernels.compiled_backend
    if compiled is None:
        sys.exit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    rows = []
    for r in ranks:
        for label, n, k in CLASS_PARAMS:
            a, b = compiled.solve_classes(r, n, k), _pykernels.solve_classes(r, n, k)
            assert np.array_equal(a, b), (r, label)
            tc = _best(lambda: compiled.solve_classes(r, n, k), repeat)
            tp = _best(lambda: _pykernels.solve_classes(r, n, k), repeat)
            rows.append((f"solve_classes {label}", r, len(a), tc, tp))

        adj = polytope(r).adjacency
        a, b = compiled.clique_counts(adj, r), _pykernels.clique_counts(adj, r)
        assert a == b, r
        tc = _best(lambda: compiled.clique_counts(adj, r), repeat)
        tp = _best(lambda: _pykernels.clique_counts(adj, r), repeat)
        rows.append(("clique_counts all layers", r, sum(a[1:]), tc, tp))

        a, b = compiled.list_cliques(adj, r), _pykernels.list_cliques(adj, r)
        assert np.array_equal(a, b), r
        tc = _best(lambda: compiled.list_cliques(adj, r), repeat)
        tp = _best(lambda: _pykernels.list_cliques(adj, r), repeat)
        rows.append(("list_cliques facets", r, len(a), tc, tp))
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--r", type=int, action="append", choices=range(3, 9))
    args = ap.parse_args(argv)
    ranks = args.r or [6, 7, 8]
    rows = run(ranks, args.repeat)
    print(f"{'kernel':<34}{'r':>3}{'size':>10}{'cython ms':>12}{'python ms':>12}{'speedup':>9}")
    for name, r, size, tc, tp in rows:
        print(f"{name:<34}{r:>3}{size:>10}{tc * 1e3:>12.2f}{tp * 1e3:>12.2f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
