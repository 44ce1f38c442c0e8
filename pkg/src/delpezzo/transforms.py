"""Monoidal transforms on lines, N_k neighbourhoods, Gieser and Bertini maps."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .enumeration import ClassSet, lines
from .gosset import GossetPolytope, crosspolytopes, simplex_array
from .picard import DivisorClass, RankError, Surface, intersect, is_line, make_surface
from .weyl import _reflect_unchecked, simple_roots


class NotALineError(ValueError):
    pass


class SymmetryError(ValueError):
    """A vertex map that is not an intersection-preserving bijection."""


def _require_line(s: Surface, l: DivisorClass) -> None:
    if l.r != s.r:
        raise RankError(f"class of rank {l.r} used on S_{s.r}")
    if not is_line(s, l):
        raise NotALineError(f"{l} is not a line on S_{s.r}")


def line_degree(s: Surface, l: DivisorClass) -> int:
    """m = l.e_r, the multiplicity at the last blown-up point.

    For l = e_r this is -1, which serves as the "not a strict transform" sentinel.
    """
    _require_line(s, l)
    return intersect(l, s.e(s.r))


@dataclass(frozen=True)
class DegreeClassification:
    r: int
    buckets: dict[int, ClassSet]


def classify_by_degree(s: Surface) -> DegreeClassification:
    er = s.e(s.r)
    groups: dict[int, list[DivisorClass]] = {}
    for l in lines(s):
        if l == er:
            continue
        groups.setdefault(line_degree(s, l), []).append(l)
    buckets = {
        m: ClassSet(s.r, f"degree-{m} lines", tuple(items))
        for m, items in sorted(groups.items())
    }
    return DegreeClassification(s.r, buckets)


def blow_down_class(s: Surface, l: DivisorClass) -> tuple[DivisorClass, int]:
    """Split l = D - m e_r; returns (D on S_{r-1}, m)."""
    _require_line(s, l)
    if s.r < 4:
        raise RankError("cannot blow down below S_3")
    if l == s.e(s.r):
        raise NotALineError("e_r is the exceptional curve itself and has no strict transform")
    return DivisorClass(l.coords[:-1]), -l.coords[-1]


def blow_up_class(d: DivisorClass, m: int) -> DivisorClass:
    """Inverse of :func:`blow_down_class`: D - m e_r on S_{r+1}."""
    return DivisorClass(d.coords + (-m,))


def transport_word(s: Surface, source: DivisorClass, target: DivisorClass) -> list[DivisorClass]:
    """Simple roots whose reflections, applied in order, carry ``source`` to ``target``.

    Blowing down an arbitrary line l is then: apply the word to l (and to
    whatever classes are being tracked) so that l becomes e_r, then call
    :func:`blow_down_class`.
    """
    gens = simple_roots(s)
    parent: dict[DivisorClass, tuple[DivisorClass, DivisorClass] | None] = {source: None}
    queue = deque([source])
    while queue:
        c = queue.popleft()
        if c == target:
            break
        for g in gens:
            img = _reflect_unchecked(g, c)
            if img not in parent:
                parent[img] = (c, g)
                queue.append(img)
    if target not in parent:
        raise ValueError(f"{target} is not in the orbit of {source}")
    word = []
    c = target
    while parent[c] is not None:
        prev, g = parent[c]
        word.append(g)
        c = prev
    return word[::-1]


def n_k(s: Surface, l: DivisorClass, k: int) -> ClassSet:
    """N_k(l) = lines l' with l'.l = k."""
    _require_line(s, l)
    return ClassSet(s.r, f"N_{k}", tuple(x for x in lines(s) if intersect(x, l) == k))


def gieser(l: DivisorClass) -> DivisorClass:
    """G(l) = -(K + l) on S_7."""
    if l.r != 7:
        raise RankError("the Gieser transform lives on S_7")
    s = make_surface(7)
    _require_line(s, l)
    return -(s.k + l)


def bertini(l: DivisorClass) -> DivisorClass:
    """B(l) = -(2K + l) on S_8."""
    if l.r != 8:
        raise RankError("the Bertini transform lives on S_8")
    s = make_surface(8)
    _require_line(s, l)
    return -(2 * s.k + l)


@dataclass(frozen=True)
class FaceMap:
    vertex_perm: np.ndarray
    # simplex_perms[k][i] = index of the image of the i-th k-simplex
    simplex_perms: dict[int, np.ndarray]
    crosspolytope_perm: np.ndarray


def vertex_permutation(
    p: GossetPolytope,
    line_map: Callable[[DivisorClass], DivisorClass] | Mapping[DivisorClass, DivisorClass],
) -> np.ndarray:
    fn = line_map.__getitem__ if isinstance(line_map, Mapping) else line_map
    try:
        perm = np.array([p.vertices.index(fn(v)) for v in p.vertices], dtype=np.int64)
    except KeyError as exc:
        raise SymmetryError(f"image {exc} is not a vertex") from None
    if len(set(perm.tolist())) != p.n:
        raise SymmetryError("vertex map is not injective")
    if not np.array_equal(p.products[np.ix_(perm, perm)], p.products):
        raise SymmetryError("vertex map does not preserve intersections")
    return perm


def _layer_permutation(faces: np.ndarray, perm: np.ndarray) -> np.ndarray:
    if len(faces) == 0:
        return np.zeros(0, dtype=np.int64)
    images = np.sort(perm[faces], axis=1)
    order = np.lexsort(images.T[::-1])
    if not np.array_equal(images[order], faces):
        raise SymmetryError("image of a simplex layer is not the same layer")
    out = np.empty(len(faces), dtype=np.int64)
    out[order] = np.arange(len(faces))
    return out


def induced_face_map(
    p: GossetPolytope,
    line_map: Callable[[DivisorClass], DivisorClass] | Mapping[DivisorClass, DivisorClass],
    max_k: int | None = None,
) -> FaceMap:
    """Permutation of every face layer induced by a symmetry of the vertices.

    Images are recomputed from vertex images and matched against the face
    lists, so a successful return is itself the proof that faces go to faces
    of the same type and dimension.
    """
    perm = vertex_permutation(p, line_map)
    top = p.r - 1 if max_k is None else min(max_k, p.r - 1)
    layers = {k: _layer_permutation(simplex_array(p, k), perm) for k in range(top + 1)}

    cps = crosspolytopes(p)
    by_ruling = {cp.ruling: idx for idx, cp in enumerate(cps)}
    cp_perm = np.empty(len(cps), dtype=np.int64)
    verts = p.vertices
    for idx, cp in enumerate(cps):
        i, j = cp.pairs[0]
        img_ruling = verts[int(perm[i])] + verts[int(perm[j])]
        target = by_ruling.get(img_ruling)
        if target is None:
            raise SymmetryError(f"crosspolytope {cp.ruling} maps to non-ruling {img_ruling}")
        img_pairs = sorted(tuple(sorted((int(perm[a]), int(perm[b])))) for a, b in cp.pairs)
        if tuple(img_pairs) != cps[target].pairs:
            raise SymmetryError(f"crosspolytope {cp.ruling} maps onto a different vertex set")
        cp_perm[idx] = target
    if len(set(cp_perm.tolist())) != len(cps):
        raise SymmetryError("crosspolytope map is not injective")
    return FaceMap(perm, layers, cp_perm)
