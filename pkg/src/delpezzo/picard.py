"""Picard lattice of the del Pezzo surface S_r.

Classes are written in the basis (h, e_1, ..., e_r) with h^2 = 1,
e_i^2 = -1 and all mixed products zero.  Every value here is an exact
integer (or a :class:`fractions.Fraction` for affine norms).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

MIN_RANK = 3
MAX_RANK = 8


class RankError(ValueError):
    """Raised for a rank outside [3, 8] or a mix of classes of different rank."""


@dataclass(frozen=True, order=True, slots=True)
class DivisorClass:
    """An element d_0 h + c_1 e_1 + ... + c_r e_r of Pic S_r.

    Ordering is lexicographic on ``coords``; this is the canonical order used
    by every class set in the package.
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.coords, tuple):
            object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def r(self) -> int:
        return len(self.coords) - 1

    def _check(self, other: DivisorClass) -> None:
        if len(other.coords) != len(self.coords):
            raise RankError(f"rank mismatch: {self.r} vs {other.r}")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-a for a in self.coords))

    def __mul__(self, n: int) -> DivisorClass:
        return DivisorClass(tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_class(self)


@dataclass(frozen=True)
class Surface:
    r: int

    def __post_init__(self) -> None:
        if not (MIN_RANK <= self.r <= MAX_RANK):
            raise RankError(f"r must lie in [{MIN_RANK}, {MAX_RANK}], got {self.r}")

    @property
    def degree(self) -> int:
        return 9 - self.r

    @property
    def k(self) -> DivisorClass:
        return DivisorClass((-3,) + (1,) * self.r)

    @property
    def h(self) -> DivisorClass:
        return DivisorClass((1,) + (0,) * self.r)

    def e(self, i: int) -> DivisorClass:
        """Exceptional class e_i, 1-based."""
        if not 1 <= i <= self.r:
            raise IndexError(f"e_{i} does not exist on S_{self.r}")
        c = [0] * (self.r + 1)
        c[i] = 1
        return DivisorClass(tuple(c))

    def cls(self, *coords: int) -> DivisorClass:
        if len(coords) != self.r + 1:
            raise RankError(f"expected {self.r + 1} coordinates, got {len(coords)}")
        return DivisorClass(tuple(coords))

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * (self.r + 1))


def make_surface(r: int) -> Surface:
    return Surface(r)


def _surface_check(s: Surface, d: DivisorClass) -> None:
    if d.r != s.r:
        raise RankError(f"class of rank {d.r} used on S_{s.r}")


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    ca, cb = a.coords, b.coords
    if len(ca) != len(cb):
        raise RankError(f"rank mismatch: {a.r} vs {b.r}")
    total = ca[0] * cb[0]
    for x, y in zip(ca[1:], cb[1:]):
        total -= x * y
    return total


def self_intersection(d: DivisorClass) -> int:
    return intersect(d, d)


def k_degree(s: Surface, d: DivisorClass) -> int:
    _surface_check(s, d)
    c = d.coords
    return -3 * c[0] - sum(c[1:])


def _signature(s: Surface, d: DivisorClass) -> tuple[int, int]:
    return self_intersection(d), k_degree(s, d)


def is_line(s: Surface, d: DivisorClass) -> bool:
    return _signature(s, d) == (-1, -1)


def is_root(s: Surface, d: DivisorClass) -> bool:
    return _signature(s, d) == (-2, 0)


def is_ruling(s: Surface, d: DivisorClass) -> bool:
    return _signature(s, d) == (0, -2)


def is_exceptional_system(s: Surface, d: DivisorClass) -> bool:
    return _signature(s, d) == (1, -3)


def affine_norm(s: Surface, d: DivisorClass, b: int) -> Fraction:
    """Squared distance D^2 - b^2/(9-r) from D to the centre of its K-slice.

    Meaningful when -D.K = b; the value is then (D - b K/(9-r))^2.
    """
    _surface_check(s, d)
    return Fraction(self_intersection(d)) - Fraction(b * b, s.degree)


def parse_class(text: str, r: int | None = None) -> DivisorClass:
    """Parse the literal ``"d0,c1,...,cr"``."""
    parts = [p.strip() for p in text.split(",")]
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"bad class literal {text!r}") from exc
    if r is not None and len(coords) != r + 1:
        raise RankError(f"literal {text!r} has {len(coords)} coordinates, expected {r + 1}")
    return DivisorClass(coords)


def format_class(d: DivisorClass) -> str:
    return ",".join(str(c) for c in d.coords)


def class_sum(items: Iterable[DivisorClass], r: int) -> DivisorClass:
    acc = [0] * (r + 1)
    for d in items:
        if d.r != r:
            raise RankError(f"class of rank {d.r} in a sum at rank {r}")
        for i, c in enumerate(d.coords):
            acc[i] += c
    return DivisorClass(tuple(acc))


def gram(classes: Sequence[DivisorClass]) -> list[list[int]]:
    return [[intersect(a, b) for b in classes] for a in classes]
