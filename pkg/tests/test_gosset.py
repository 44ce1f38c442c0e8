import itertools

import numpy as np
import pytest

from conftest import brute_clique_counts
from delpezzo import kernels
from delpezzo.enumeration import a_divisors, exceptional_systems, lines, rulings, skew_decompose
from delpezzo.gosset import (
    Crosspolytope,
    Simplex,
    audit_simplex_centers,
    center,
    count_simplexes,
    crosspolytope_face_counts,
    crosspolytope_structure_ok,
    crosspolytopes,
    expected_face_table,
    face_count_formula,
    facet_exceptional_systems,
    list_simplexes,
    polytope,
    simplex_array,
    simplex_to_exceptional_system,
)
from delpezzo.picard import intersect, make_surface


@pytest.mark.parametrize("r,n,deg", [(6, 27, 16), (8, 240, 56), (7, 56, 27), (5, 16, 10), (4, 10, 6)])
def test_vertex_counts_and_degree(r, n, deg):
    p = polytope(r)
    assert p.n == n
    assert set(p.adjacency.sum(axis=1).tolist()) == {deg}


def test_prism():
    p = polytope(3)
    assert p.n == 6 and len(p.edges()) == 9


@pytest.mark.parametrize("r", range(3, 9))
def test_adjacency_is_skewness(r):
    p = polytope(r)
    adj = p.adjacency
    assert np.array_equal(adj, adj.T) and not adj.diagonal().any()
    for i, j in itertools.combinations(range(min(p.n, 60)), 2):
        assert adj[i, j] == (intersect(p.vertices[i], p.vertices[j]) == 0)


@pytest.mark.parametrize("r,k,n", [(6, 5, 72), (8, 7, 17280), (7, 3, 10080), (6, 1, 216)])
def test_count_simplexes(r, k, n):
    assert count_simplexes(polytope(r), k) == n


def test_count_simplexes_range():
    with pytest.raises(ValueError):
        count_simplexes(polytope(5), 5)
    with pytest.raises(ValueError):
        count_simplexes(polytope(5), -1)


@pytest.mark.parametrize("r", [3, 4, 5])
def test_layer_counts_brute_force(r):
    p = polytope(r)
    assert [1] + list(p.layer_counts) == brute_clique_counts(p.adjacency, r)


@pytest.mark.parametrize("r", range(3, 8))
def test_full_face_table(r):
    p = polytope(r)
    got = (len(crosspolytopes(p)),) + p.layer_counts
    assert got == expected_face_table(r)


@pytest.mark.slow
def test_full_face_table_r8():
    p = polytope(8)
    assert (len(crosspolytopes(p)),) + p.layer_counts == expected_face_table(8)


def test_expected_face_table_examples():
    assert expected_face_table(7) == (126, 56, 756, 4032, 10080, 12096, 6048, 576)
    assert expected_face_table(4) == (5, 10, 30, 30, 5)
    assert expected_face_table(5) == (10, 16, 80, 160, 120, 16)


@pytest.mark.parametrize("r", [4, 6])
def test_list_simplexes_are_sorted_cliques(r):
    p = polytope(r)
    for k in range(r):
        faces = list_simplexes(p, k)
        assert len(faces) == count_simplexes(p, k)
        assert [f.vertices for f in faces] == sorted(f.vertices for f in faces)
        for f in faces:
            assert f.dimension == k
            assert list(f.vertices) == sorted(set(f.vertices))
            assert all(p.adjacency[a, b] for a, b in itertools.combinations(f.vertices, 2))


def test_crosspolytope_h_minus_e6():
    s = make_surface(6)
    p = polytope(6)
    f = s.h - s.e(6)
    cp = next(c for c in crosspolytopes(p) if c.ruling == f)
    want = {
        tuple(sorted((p.vertices.index(s.e(i)), p.vertices.index(s.h - s.e(i) - s.e(6)))))
        for i in range(1, 6)
    }
    assert set(cp.pairs) == want
    assert center(p, cp) == f


def test_crosspolytope_square_r3():
    s = make_surface(3)
    p = polytope(3)
    f = s.h - s.e(1)
    cp = next(c for c in crosspolytopes(p) if c.ruling == f)
    pairs = {frozenset((p.vertices[i], p.vertices[j])) for i, j in cp.pairs}
    assert pairs == {frozenset((s.e(2), s.h - s.e(1) - s.e(2))), frozenset((s.e(3), s.h - s.e(1) - s.e(3)))}


@pytest.mark.parametrize("r,n", [(5, 10), (7, 126), (8, 2160)])
def test_crosspolytope_counts(r, n):
    assert len(crosspolytopes(polytope(r))) == n == len(rulings(make_surface(r)))


@pytest.mark.parametrize("r", range(3, 9))
def test_crosspolytope_structure(r):
    p = polytope(r)
    want = [face_count_formula("crosspolytope", r - 1, k) for k in range(r - 1)]
    cps = crosspolytopes(p)
    for cp in cps[:: max(1, len(cps) // 150)]:
        assert crosspolytope_structure_ok(p, cp)
        assert crosspolytope_face_counts(p, cp) == want
        for i, j in cp.pairs:
            assert p.vertices[i] + p.vertices[j] == cp.ruling


def test_center_simplex():
    s = make_surface(5)
    p = polytope(5)
    x = Simplex((p.vertices.index(s.e(1)), p.vertices.index(s.e(2))))
    assert center(p, x) == s.e(1) + s.e(2)


@pytest.mark.parametrize("r", range(3, 8))
def test_simplex_centers_distinct_and_recovered(r):
    p = polytope(r)
    for k in range(r):
        assert audit_simplex_centers(p, k)
    # spot-check the per-class path against the vectorised audit
    for x in list_simplexes(p, min(2, r - 1))[:50]:
        parts = skew_decompose(p.surface, center(p, x))
        assert parts == {p.vertices[i] for i in x.vertices}


def test_phi_h():
    s = make_surface(6)
    p = polytope(6)
    x = Simplex(tuple(sorted(p.vertices.index(s.e(i)) for i in range(1, 7))))
    assert simplex_to_exceptional_system(p, x) == s.h


def test_phi_wrong_dimension():
    with pytest.raises(ValueError):
        simplex_to_exceptional_system(polytope(6), Simplex((0, 1)))


@pytest.mark.parametrize("r", range(3, 8))
def test_phi_bijection(r):
    p = polytope(r)
    images = [simplex_to_exceptional_system(p, x) for x in list_simplexes(p, r - 1)]
    assert None not in images
    assert len(set(images)) == len(images)
    assert set(images) == exceptional_systems(p.surface).as_set()


@pytest.mark.slow
def test_phi_r8():
    p = polytope(8)
    s = p.surface
    ok, systems = facet_exceptional_systems(p)
    assert int(ok.sum()) == 17280
    images = {tuple(row) for row in systems[ok].tolist()}
    assert len(images) == 17280
    all_sys = {d.coords for d in exceptional_systems(s)}
    missing = all_sys - images
    assert len(missing) == 240
    from delpezzo.enumeration import roots

    assert missing == {(-3 * s.k + 2 * d).coords for d in roots(s)}


@pytest.mark.parametrize("r", range(3, 9))
def test_a_divisor_equivalence(r):
    p = polytope(r)
    s = p.surface
    assert len(a_divisors(s, 2)) == count_simplexes(p, 1)
    assert len(a_divisors(s, 3)) == count_simplexes(p, 2)
    assert len(lines(s)) == count_simplexes(p, 0)


def test_face_count_formula():
    assert face_count_formula("simplex", 3, 1) == 6
    for n in range(1, 9):
        assert face_count_formula("crosspolytope", n, 0) == 2 * n
    assert face_count_formula("crosspolytope", 5, 4) == 32
    with pytest.raises(ValueError):
        face_count_formula("simplex", 3, 3)
    with pytest.raises(ValueError):
        face_count_formula("cube", 3, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_face_count_formula_by_graphs(n):
    simplex = np.ones((n + 1, n + 1), dtype=bool)
    np.fill_diagonal(simplex, False)
    # cocktail-party graph: all pairs except antipodes 2i, 2i+1
    cross = np.ones((2 * n, 2 * n), dtype=bool)
    np.fill_diagonal(cross, False)
    for i in range(n):
        cross[2 * i, 2 * i + 1] = cross[2 * i + 1, 2 * i] = False
    a = brute_clique_counts(simplex, n)
    b = brute_clique_counts(cross, n)
    for k in range(n):
        assert a[k + 1] == face_count_formula("simplex", n, k)
        assert b[k + 1] == face_count_formula("crosspolytope", n, k)


def test_beta5_facets_inside_221():
    p = polytope(6)
    for cp in crosspolytopes(p):
        assert crosspolytope_face_counts(p, cp)[4] == 32


def test_cubic_surface_blow_down_example():
    s = make_surface(6)
    p = polytope(6)
    fives = [s.h - s.e(i) - s.e(6) for i in range(1, 6)]
    assert all(intersect(a, b) == 0 for a, b in itertools.combinations(fives, 2))
    assert {fives[i - 1] + s.e(i) for i in range(1, 6)} == {s.h - s.e(6)}
    cp = next(c for c in crosspolytopes(p) if c.ruling == s.h - s.e(6))
    assert {p.vertices[v] for v in cp.vertices} == set(fives) | {s.e(i) for i in range(1, 6)}


def test_simplex_array_matches_kernel_listing():
    p = polytope(5)
    assert np.array_equal(simplex_array(p, 2), kernels.list_cliques(p.adjacency, 3))
