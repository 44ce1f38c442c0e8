import itertools

import pytest

from conftest import box_classes
from delpezzo.enumeration import (
    ClassSet,
    a_divisors,
    audit_coordinate_bound,
    e8_theta_coefficient,
    exceptional_systems,
    lines,
    roots,
    rulings,
    sigma3,
    skew_decompose,
    solve_classes,
)
from delpezzo.picard import DivisorClass, intersect, make_surface


def coords(cs: ClassSet) -> set:
    return {d.coords for d in cs}


def test_lines_r3_explicit():
    s = make_surface(3)
    e1, e2, e3, h = s.e(1), s.e(2), s.e(3), s.h
    want = {e1, e2, e3, h - e1 - e2, h - e1 - e3, h - e2 - e3}
    assert set(solve_classes(s, -1, -1)) == want


def test_two_divisors_r3_by_brute_force():
    # the printed 2-divisor table says 6; the box search is the authority
    assert coords(solve_classes(make_surface(3), -2, -2)) == box_classes(3)[(-2, -2)]
    assert len(box_classes(3)[(-2, -2)]) == 9


@pytest.mark.parametrize(
    "r,params,n",
    [(6, (-1, -1), 27), (8, (0, -2), 2160), (8, (-1, -1), 240), (8, (1, -3), 17520)],
)
def test_paper_counts(r, params, n):
    assert len(solve_classes(make_surface(r), *params)) == n


@pytest.mark.parametrize("r", [3, 4, 5])
def test_solve_classes_matches_box(r):
    box = box_classes(r)
    s = make_surface(r)
    for n in range(-3, 4):
        for k in range(-3, 4):
            assert coords(solve_classes(s, n, k)) == box.get((n, k), set()), (n, k)


def test_infeasible_is_empty():
    # Hodge: k^2 >= n (9 - r) fails
    assert len(solve_classes(make_surface(6), 5, -1)) == 0


@pytest.mark.parametrize("r", range(3, 9))
def test_class_sets_sorted_and_valid(r):
    s = make_surface(r)
    for cs, (n, k) in [(lines(s), (-1, -1)), (roots(s), (-2, 0)), (rulings(s), (0, -2)), (exceptional_systems(s), (1, -3))]:
        items = list(cs)
        assert items == sorted(set(items))
        for d in items[:: max(1, len(items) // 200)]:
            assert intersect(d, d) == n and intersect(d, s.k) == k


def test_roots_r6():
    assert len(roots(make_surface(6))) == 72


@pytest.mark.parametrize("r,a,n", [(4, 2, 30), (8, 3, 60480), (3, 3, 2)])
def test_a_divisors(r, a, n):
    assert len(a_divisors(make_surface(r), a)) == n


def test_a_divisors_range():
    with pytest.raises(ValueError):
        a_divisors(make_surface(4), 5)


def test_skew_decompose_examples():
    s5 = make_surface(5)
    assert skew_decompose(s5, s5.e(1) + s5.e(2)) == {s5.e(1), s5.e(2)}
    s3 = make_surface(3)
    d = s3.h + s3.e(1) - s3.e(2) - s3.e(3)
    assert skew_decompose(s3, d) == {s3.e(1), s3.h - s3.e(2) - s3.e(3)}


def test_skew_decompose_rejects_root_system_image():
    s = make_surface(8)
    d = roots(s)[0]
    assert skew_decompose(s, -8 * s.k + 6 * d) is None


def test_skew_decompose_rejects_intersecting_pair():
    s = make_surface(6)
    # e_1 and h - e_1 - e_2 meet once
    assert skew_decompose(s, s.h - s.e(2)) is None


def test_sigma3_trial_division():
    assert [sigma3(n) for n in range(1, 7)] == [1, 9, 28, 73, 126, 252]


@pytest.mark.parametrize("m,n", [(0, 1), (2, 240), (4, 2160), (3, 0), (8, 17520)])
def test_e8_theta(m, n):
    assert e8_theta_coefficient(m) == n


def test_e8_theta_negative():
    with pytest.raises(ValueError):
        e8_theta_coefficient(-2)


@pytest.mark.parametrize("a,b", [(-1, 1), (0, 2), (1, 3), (-2, 2)])
def test_e8_cross_check(a, b):
    assert len(solve_classes(make_surface(8), a, -b)) == e8_theta_coefficient(-a + b * b)


@pytest.mark.parametrize("r", range(3, 9))
def test_line_intersection_ranges(r):
    s = make_surface(r)
    ls = list(lines(s))
    allowed = {0, 1} if r <= 6 else ({0, 1, 2} if r == 7 else {0, 1, 2, 3})
    seen = set()
    for l1, l2 in itertools.combinations(ls, 2):
        v = intersect(l1, l2)
        seen.add(v)
        assert v in allowed
        if r == 7:
            assert (v == 2) == (l1 + l2 == -s.k)
        if r == 8:
            assert (v == 3) == (l1 + l2 == -2 * s.k)
    assert seen == allowed


@pytest.mark.parametrize("r", range(3, 8))
@pytest.mark.parametrize("a", [1, 2, 3])
def test_a_divisors_are_skew_sums(r, a):
    if a > r:
        pytest.skip("a > r")
    s = make_surface(r)
    for d in a_divisors(s, a):
        parts = skew_decompose(s, d)
        assert parts is not None and len(parts) == a


def test_coordinate_audit():
    assert audit_coordinate_bound() <= 64


def test_classset_rejects_unsorted():
    a, b = DivisorClass((0, 1)), DivisorClass((1, 0))
    with pytest.raises(ValueError):
        ClassSet(1, "x", (b, a))
    with pytest.raises(ValueError):
        ClassSet(1, "x", (a, a))
