"""Exact enumeration of divisor classes with a prescribed (D^2, D.K)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import kernels
from .picard import DivisorClass, Surface, class_sum, intersect, make_surface

LINES = (-1, -1)
ROOTS = (-2, 0)
RULINGS = (0, -2)
EXCEPTIONAL_SYSTEMS = (1, -3)

KIND_PARAMS = {
    "lines": LINES,
    "roots": ROOTS,
    "rulings": RULINGS,
    "exceptional_systems": EXCEPTIONAL_SYSTEMS,
}


@dataclass(frozen=True)
class ClassSet:
    """Canonically ordered, duplicate-free set of classes on one surface."""

    r: int
    kind: str
    items: tuple[DivisorClass, ...]

    def __post_init__(self) -> None:
        it = self.items
        for a, b in zip(it, it[1:]):
            if not a < b:
                raise ValueError("ClassSet items must be strictly increasing")

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[DivisorClass]:
        return iter(self.items)

    def __getitem__(self, i: int) -> DivisorClass:
        return self.items[i]

    def __contains__(self, d: object) -> bool:
        return d in self.as_set()

    def as_set(self) -> frozenset[DivisorClass]:
        cached = self.__dict__.get("_set")
        if cached is None:
            cached = frozenset(self.items)
            object.__setattr__(self, "_set", cached)
        return cached

    def index(self, d: DivisorClass) -> int:
        lookup = self.__dict__.get("_index")
        if lookup is None:
            lookup = {c: i for i, c in enumerate(self.items)}
            object.__setattr__(self, "_index", lookup)
        return lookup[d]

    def array(self) -> np.ndarray:
        """Coordinates as an (n, r+1) int64 matrix in canonical order."""
        arr = np.array([d.coords for d in self.items], dtype=np.int64)
        return arr.reshape(len(self.items), self.r + 1)

    @classmethod
    def from_classes(cls, r: int, kind: str, classes) -> ClassSet:
        return cls(r, kind, tuple(sorted(set(classes))))


@lru_cache(maxsize=None)
def _solve_cached(r: int, self_int: int, k_deg: int) -> tuple[DivisorClass, ...]:
    rows = kernels.solve_classes(r, self_int, k_deg)
    return tuple(DivisorClass(tuple(int(x) for x in row)) for row in rows)


def solve_classes(s: Surface, self_int: int, k_deg: int) -> ClassSet:
    """Every D with D^2 = self_int and D.K = k_deg.

    d_0 is bounded by Cauchy-Schwarz on (sum c_i)^2 <= r sum c_i^2; the
    remaining coordinates come from a depth-first search pruned by the same
    inequality on the unassigned tail.  Infeasible pairs give an empty set.
    """
    kind = _kind_name(self_int, k_deg)
    return ClassSet(s.r, kind, _solve_cached(s.r, self_int, k_deg))


def _kind_name(self_int: int, k_deg: int) -> str:
    for name, params in KIND_PARAMS.items():
        if params == (self_int, k_deg):
            return name
    return f"generic({self_int},{k_deg})"


def lines(s: Surface) -> ClassSet:
    return solve_classes(s, *LINES)


def roots(s: Surface) -> ClassSet:
    return solve_classes(s, *ROOTS)


def rulings(s: Surface) -> ClassSet:
    return solve_classes(s, *RULINGS)


def exceptional_systems(s: Surface) -> ClassSet:
    return solve_classes(s, *EXCEPTIONAL_SYSTEMS)


def a_divisors(s: Surface, a: int) -> ClassSet:
    if not 1 <= a <= s.r:
        raise ValueError(f"a must lie in [1, {s.r}], got {a}")
    return solve_classes(s, -a, -a)


def skew_decompose(s: Surface, d: DivisorClass) -> frozenset[DivisorClass] | None:
    """Unique decomposition of ``d`` as a sum of pairwise-skew lines, if any.

    Any line in such a sum meets the sum with product -1, so the candidates
    are exactly the lines l with d.l = -1.
    """
    cand = [l for l in lines(s) if intersect(d, l) == -1]
    for i, a in enumerate(cand):
        for b in cand[i + 1:]:
            if intersect(a, b) != 0:
                return None
    if class_sum(cand, s.r) != d:
        return None
    return frozenset(cand)


def sigma3(n: int) -> int:
    return sum(k ** 3 for k in range(1, n + 1) if n % k == 0)


def e8_theta_coefficient(m: int) -> int:
    """Number of E8 lattice vectors of norm m."""
    if m < 0:
        raise ValueError("norm must be non-negative")
    if m == 0:
        return 1
    if m % 2:
        return 0
    return 240 * sigma3(m // 2)


def audit_coordinate_bound(limit: int = 64) -> int:
    """Largest |coordinate| over all in-scope sets; raises past ``limit``."""
    worst = 0
    for r in range(3, 9):
        s = make_surface(r)
        sets = [lines(s), roots(s), rulings(s), exceptional_systems(s)]
        sets += [a_divisors(s, a) for a in (2, 3) if a <= r]
        for cs in sets:
            if len(cs):
                worst = max(worst, int(np.abs(cs.array()).max()))
    if worst > limit:
        raise OverflowError(f"coordinate {worst} exceeds audit bound {limit}")
    return worst
