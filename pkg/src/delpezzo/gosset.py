"""The Gosset polytope (r-4)_21 on the lines of S_r and its faces.

Vertices are the lines in canonical order; two vertices share an edge iff
the lines are skew.  Simplex faces are cliques of the skew graph and the
crosspolytope facets are read off from the rulings.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from math import comb

import numpy as np

from . import kernels
from .enumeration import ClassSet, lines, rulings
from .picard import DivisorClass, Surface, class_sum, make_surface


@dataclass(frozen=True)
class Simplex:
    vertices: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class Crosspolytope:
    ruling: DivisorClass
    pairs: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for p in self.pairs for v in p))

    @property
    def dimension(self) -> int:
        return len(self.pairs)


def intersection_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """All pairwise products between the rows of two coordinate matrices."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    return np.outer(a[:, 0], b[:, 0]) - a[:, 1:] @ b[:, 1:].T


@dataclass(frozen=True, eq=False)
class GossetPolytope:
    surface: Surface
    vertices: ClassSet
    products: np.ndarray = field(repr=False)
    adjacency: np.ndarray = field(repr=False)

    @property
    def r(self) -> int:
        return self.surface.r

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def coords(self) -> np.ndarray:
        return self.vertices.array()

    @cached_property
    def bit_rows(self) -> tuple[int, ...]:
        rows = []
        for row in self.adjacency:
            rows.append(sum(1 << int(j) for j in np.flatnonzero(row)))
        return tuple(rows)

    @cached_property
    def layer_counts(self) -> tuple[int, ...]:
        """counts[k] = number of k-simplexes, k = 0 .. r-1."""
        counts = kernels.clique_counts(self.adjacency, self.r)
        return tuple(counts[1:])

    def edges(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(a), int(b)) for a, b in zip(i, j)]


def build_polytope(s: Surface) -> GossetPolytope:
    verts = lines(s)
    prod = intersection_matrix(verts.array(), verts.array())
    adj = prod == 0
    np.fill_diagonal(adj, False)
    prod.setflags(write=False)
    adj.setflags(write=False)
    return GossetPolytope(s, verts, prod, adj)


_POLYTOPES: dict[int, GossetPolytope] = {}


def polytope(r: int) -> GossetPolytope:
    """Cached polytope for S_r."""
    if r not in _POLYTOPES:
        _POLYTOPES[r] = build_polytope(make_surface(r))
    return _POLYTOPES[r]


def _check_k(p: GossetPolytope, k: int) -> None:
    if not 0 <= k <= p.r - 1:
        raise ValueError(f"simplex dimension must lie in [0, {p.r - 1}], got {k}")


def count_simplexes(p: GossetPolytope, k: int) -> int:
    _check_k(p, k)
    return p.layer_counts[k]


def simplex_array(p: GossetPolytope, k: int) -> np.ndarray:
    """All k-simplexes as an (N, k+1) index matrix, rows in lexicographic order."""
    _check_k(p, k)
    return kernels.list_cliques(p.adjacency, k + 1)


def list_simplexes(p: GossetPolytope, k: int) -> list[Simplex]:
    return [Simplex(tuple(int(v) for v in row)) for row in simplex_array(p, k)]


def crosspolytopes(p: GossetPolytope) -> list[Crosspolytope]:
    """One (r-1)-crosspolytope per ruling f: the lines l with f.l = 0, paired by l <-> f - l."""
    fs = rulings(p.surface)
    if not len(fs):
        return []
    prod = intersection_matrix(fs.array(), p.coords)
    out = []
    for f, row in zip(fs, prod):
        members = np.flatnonzero(row == 0)
        pairs = set()
        for i in members:
            j = p.vertices.index(f - p.vertices[int(i)])
            pairs.add((min(int(i), j), max(int(i), j)))
        pairs = tuple(sorted(pairs))
        if len(members) != 2 * (p.r - 1) or len(pairs) != p.r - 1:
            raise AssertionError(f"ruling {f} gives {len(members)} vertices, {len(pairs)} pairs")
        out.append(Crosspolytope(f, pairs))
    return out


def center(p: GossetPolytope, face: Simplex | Crosspolytope) -> DivisorClass:
    if isinstance(face, Crosspolytope):
        return face.ruling
    return class_sum((p.vertices[i] for i in face.vertices), p.r)


def simplex_to_exceptional_system(p: GossetPolytope, x: Simplex) -> DivisorClass | None:
    """Inverse of D -> K + 3D on a facet simplex: (center - K)/3 when integral."""
    if len(x.vertices) != p.r:
        raise ValueError(f"expected a facet simplex with {p.r} vertices, got {len(x.vertices)}")
    diff = center(p, x) - p.surface.k
    if any(c % 3 for c in diff.coords):
        return None
    return DivisorClass(tuple(c // 3 for c in diff.coords))


def facet_exceptional_systems(p: GossetPolytope) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised Phi^-1 over all facet simplexes.

    Returns (ok, systems): a boolean mask of integral images and the
    (N, r+1) matrix of (center - K) // 3.
    """
    facets = simplex_array(p, p.r - 1)
    diff = p.coords[facets].sum(axis=1) - np.array(p.surface.k.coords)
    ok = (diff % 3 == 0).all(axis=1)
    return ok, diff // 3


def simplex_centers(p: GossetPolytope, faces: np.ndarray) -> np.ndarray:
    return p.coords[faces].sum(axis=1)


def audit_simplex_centers(p: GossetPolytope, k: int, chunk: int = 20000) -> bool:
    """Centers of k-simplexes are distinct and each decomposes back to its own vertices.

    Decomposition: the lines meeting the center with product -1 must be
    exactly the simplex's vertices.
    """
    faces = simplex_array(p, k)
    if len(faces) == 0:
        return True
    centers = simplex_centers(p, faces)
    if len(np.unique(centers, axis=0)) != len(faces):
        return False
    for start in range(0, len(faces), chunk):
        f = faces[start:start + chunk]
        prod = intersection_matrix(centers[start:start + chunk], p.coords)
        hit = prod == -1
        member = np.zeros_like(hit)
        np.put_along_axis(member, f.astype(np.int64), True, axis=1)
        if not np.array_equal(hit, member):
            return False
    return True


def crosspolytope_face_counts(p: GossetPolytope, cp: Crosspolytope) -> list[int]:
    """Simplex counts inside one crosspolytope; entry k counts k-simplexes."""
    v = np.array(cp.vertices)
    sub = p.adjacency[np.ix_(v, v)]
    counts = kernels.clique_counts(sub, len(cp.pairs))
    return counts[1:]


def crosspolytope_structure_ok(p: GossetPolytope, cp: Crosspolytope) -> bool:
    """Antipodal pairs meet with product 1; every other vertex pair is skew."""
    partner = {}
    for i, j in cp.pairs:
        partner[i], partner[j] = j, i
    verts = cp.vertices
    for a in verts:
        for b in verts:
            if a == b:
                continue
            want = 1 if partner[a] == b else 0
            if p.products[a, b] != want:
                return False
            if bool(p.adjacency[a, b]) != (want == 0):
                return False
    return True


def face_count_formula(family: str, n: int, k: int) -> int:
    """k-faces of the regular n-simplex ("simplex") or n-crosspolytope ("crosspolytope")."""
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    if family in ("simplex", "alpha"):
        return comb(n + 1, k + 1)
    if family in ("crosspolytope", "beta"):
        return 2 ** (k + 1) * comb(n, k + 1)
    raise ValueError(f"unknown family {family!r}")


EXPECTED_KEYS = (
    "lines", "rulings", "exceptional_systems", "face_table", "a_divisors_2", "a_divisors_3",
    "weyl_order", "facet_phi_successes", "exceptional_orbits_r8", "theta_e8", "n0_n1_r3",
)


def load_expected(path=None) -> dict:
    if path is None:
        text = resources.files("delpezzo").joinpath("data/expected.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    data = json.loads(text)
    missing = [k for k in EXPECTED_KEYS if k not in data]
    if missing:
        raise ValueError(f"expected-values fixture lacks {', '.join(missing)}")
    return data


def expected_face_table(r: int, expected: dict | None = None) -> tuple[int, ...]:
    """(beta_{r-1} count, vertices, alpha_1, ..., alpha_{r-1}) for (r-4)_21."""
    make_surface(r)
    table = (expected or load_expected())["face_table"][str(r)]["value"]
    return tuple(table)
