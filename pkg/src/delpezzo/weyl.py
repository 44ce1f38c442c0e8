"""Simple roots, reflections and orbits of the Weyl group W(S_r)."""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .enumeration import ClassSet, lines
from .picard import DivisorClass, RankError, Surface, intersect, is_root, make_surface


class NotARootError(ValueError):
    pass


def simple_roots(s: Surface) -> tuple[DivisorClass, ...]:
    """d_0 = h - e_1 - e_2 - e_3, then d_i = e_i - e_{i+1} for 1 <= i < r."""
    r = s.r
    d0 = [1, -1, -1, -1] + [0] * (r - 3)
    out = [DivisorClass(tuple(d0))]
    for i in range(1, r):
        c = [0] * (r + 1)
        c[i], c[i + 1] = 1, -1
        out.append(DivisorClass(tuple(c)))
    return tuple(out)


def _reflect_unchecked(root: DivisorClass, d: DivisorClass) -> DivisorClass:
    t = intersect(d, root)
    if t == 0:
        return d
    return DivisorClass(tuple(x + t * y for x, y in zip(d.coords, root.coords)))


def reflect(root: DivisorClass, d: DivisorClass) -> DivisorClass:
    """sigma_root(d) = d + (d.root) root."""
    if root.r != d.r:
        raise RankError(f"rank mismatch: {root.r} vs {d.r}")
    if not is_root(Surface(root.r), root):
        raise NotARootError(f"{root} is not a root")
    return _reflect_unchecked(root, d)


def orbit(
    s: Surface,
    seed: DivisorClass,
    generators: Sequence[DivisorClass] | None = None,
    kind: str = "orbit",
) -> ClassSet:
    """Breadth-first closure of {seed} under the given root reflections."""
    gens = tuple(simple_roots(s) if generators is None else generators)
    for g in gens:
        if g.r != s.r or not is_root(s, g):
            raise NotARootError(f"{g} is not a root of S_{s.r}")
    if seed.r != s.r:
        raise RankError(f"seed has rank {seed.r}, surface has {s.r}")
    # plain tuples in the inner loop; DivisorClass objects only at the end
    gen_rows = [(g.coords[0], g.coords[1:], g.coords) for g in gens]
    seen = {seed.coords}
    frontier = deque([seed.coords])
    while frontier:
        c = frontier.popleft()
        for g0, gt, gc in gen_rows:
            t = c[0] * g0
            for x, y in zip(c[1:], gt):
                t -= x * y
            if t == 0:
                continue
            img = tuple(x + t * y for x, y in zip(c, gc))
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return ClassSet(s.r, kind, tuple(DivisorClass(c) for c in sorted(seen)))


def weyl_order(r: int) -> int:
    """|W(S_r)| via |W(S_r)| = |L_r| |W(S_{r-1})|, starting from |W(S_3)| = 12.

    The line count is the orbit size of e_r; its stabilizer is W(S_{r-1}).
    """
    make_surface(r)
    order = 12
    for k in range(4, r + 1):
        order *= len(lines(make_surface(k)))
    return order
