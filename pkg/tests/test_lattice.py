import pytest
from hypothesis import given, strategies as st

from manhattan_pi.lattice import (
    MAX_COORD,
    ArithmeticRangeError,
    LatticePoint,
    Metric,
    l1_distance,
    l2_distance_squared,
)

coord = st.integers(min_value=-MAX_COORD, max_value=MAX_COORD)
points = st.builds(LatticePoint, coord, coord)


@pytest.mark.parametrize(
    "p, q, expected",
    [((0, 0), (0, 0), 0), ((0, 0), (3, 4), 7), ((5, 0), (0, 5), 10)],
)
def test_l1_examples(p, q, expected):
    assert l1_distance(LatticePoint(*p), LatticePoint(*q)) == expected


@pytest.mark.parametrize(
    "p, q, expected",
    [((0, 0), (3, 4), 25), ((0, 0), (0, 0), 0), ((5, 0), (0, 5), 50)],
)
def test_l2_squared_examples(p, q, expected):
    assert l2_distance_squared(LatticePoint(*p), LatticePoint(*q)) == expected


def test_metric_enum_dispatch():
    p, q = LatticePoint(0, 0), LatticePoint(3, 4)
    assert Metric.MANHATTAN.distance(p, q) == 7
    assert Metric.EUCLIDEAN_SQUARED.distance(p, q) == 25


def test_out_of_range_rejected():
    with pytest.raises(ArithmeticRangeError):
        l1_distance(LatticePoint(MAX_COORD + 1, 0), LatticePoint(0, 0))
    with pytest.raises(ArithmeticRangeError):
        l2_distance_squared(LatticePoint(0, 0), LatticePoint(0, -MAX_COORD - 1))


def test_extreme_values_exact():
    p, q = LatticePoint(MAX_COORD, MAX_COORD), LatticePoint(-MAX_COORD, -MAX_COORD)
    assert l1_distance(p, q) == 2**32
    assert l2_distance_squared(p, q) == 2**63


@given(points, points)
def test_symmetric_and_zero_iff_equal(p, q):
    assert l1_distance(p, q) == l1_distance(q, p) >= 0
    assert l2_distance_squared(p, q) == l2_distance_squared(q, p) >= 0
    assert (l1_distance(p, q) == 0) == (p == q)
    assert (l2_distance_squared(p, q) == 0) == (p == q)


@given(points, points)
def test_l1_squared_dominates_l2_squared(p, q):
    l1 = l1_distance(p, q)
    l2sq = l2_distance_squared(p, q)
    assert l1 * l1 >= l2sq
    assert (l1 * l1 == l2sq) == (p.x == q.x or p.y == q.y)


@given(points, points, points)
def test_triangle_inequalities(p, q, s):
    assert l1_distance(p, s) <= l1_distance(p, q) + l1_distance(q, s)
    # sqrt(A) <= sqrt(B) + sqrt(C)  <=>  A - B - C <= 0 or (A - B - C)^2 <= 4BC
    a, b, c = l2_distance_squared(p, s), l2_distance_squared(p, q), l2_distance_squared(q, s)
    gap = a - b - c
    assert gap <= 0 or gap * gap <= 4 * b * c
