import itertools
import warnings

import numpy as np
import pytest

from hypothesis import given, strategies as st

from tarski_search.errors import (BoxOrderError, BudgetExceededError,
                                  InvalidPointError, InvalidShapeError,
                                  ShapeMismatchError)
from tarski_search.lattice import (GridShape, check_budget, clamp_to_box,
                                   format_point, iterate_points, join, leq,
                                   meet, parse_point, points_array)


@st.composite
def points(draw, n=6, k=3, count=1):
    pts = [
        tuple(draw(st.lists(st.integers(0, n - 1), min_size=k, max_size=k)))
        for _ in range(count)
    ]
    return pts if count > 1 else pts[0]


def test_grid_shape_rejects_empty_grids():
    with pytest.raises(InvalidShapeError):
        GridShape(0, 2)
    with pytest.raises(InvalidShapeError):
        GridShape(3, 0)
    # still a ValueError for callers outside the package
    with pytest.raises(ValueError):
        GridShape(-1, 1)


def test_grid_shape_corners_and_size():
    shape = GridShape(7, 2)
    assert shape.size == 49
    assert shape.bottom == (0, 0)
    assert shape.top == (6, 6)
    assert shape.contains((6, 0))
    assert not shape.contains((7, 0))
    assert not shape.contains((1, 1, 1))


def test_validate_reports_bad_points():
    shape = GridShape(3, 2)
    assert shape.validate([1, 2]) == (1, 2)
    with pytest.raises(InvalidPointError):
        shape.validate((1, 3))
    with pytest.raises(InvalidPointError):
        shape.validate((1, ))


def test_rank_matches_lexicographic_order():
    shape = GridShape(3, 3)
    for r, v in enumerate(iterate_points(shape)):
        assert shape.rank(v) == r
        assert shape.unrank(r) == v


def test_leq_examples():
    assert leq((0, 0), (1, 2))
    assert not leq((1, 0), (0, 1))
    assert not leq((0, 1), (1, 0))
    assert leq((3, 1), (3, 1))


def test_leq_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        leq((0, 0), (0, 0, 0))
    with pytest.raises(ShapeMismatchError):
        meet((0, ), (1, 1))


def test_meet_and_join_examples():
    assert meet((1, 3), (2, 0)) == (1, 0)
    assert join((1, 3), (2, 0)) == (2, 3)
    assert meet((4, 2), (4, 2)) == (4, 2)


def test_leq_is_a_partial_order_on_small_grid():
    P = list(iterate_points(GridShape(3, 2)))
    for u in P:
        assert leq(u, u)
    for u, v in itertools.product(P, P):
        if leq(u, v) and leq(v, u):
            assert u == v
    for u, v, w in itertools.product(P, P, P):
        if leq(u, v) and leq(v, w):
            assert leq(u, w)


@given(points(count=2))
def test_meet_join_bounds_and_absorption(pair):
    u, v = pair
    assert leq(meet(u, v), u) and leq(meet(u, v), v)
    assert leq(u, join(u, v)) and leq(v, join(u, v))
    assert join(u, meet(u, v)) == u
    assert meet(u, join(u, v)) == u


def test_iterate_points_order():
    assert list(iterate_points(GridShape(2, 2))) == [(0, 0), (0, 1), (1, 0),
                                                     (1, 1)]
    assert list(iterate_points(GridShape(3, 1))) == [(0, ), (1, ), (2, )]
    P = list(iterate_points(GridShape(2, 3)))
    assert len(P) == 8
    assert P[0] == (0, 0, 0) and P[-1] == (1, 1, 1)


def test_points_array_rows_match_iteration():
    shape = GridShape(4, 3)
    A = points_array(shape)
    assert A.shape == (64, 3)
    np.testing.assert_array_equal(A, np.array(list(iterate_points(shape))))


def test_budget_refuses_large_grids():
    shape = GridShape(2, 25)
    with pytest.raises(BudgetExceededError) as e:
        iterate_points(shape)
    assert e.value.size == 2**25
    with pytest.raises(BudgetExceededError):
        check_budget(GridShape(3, 3), budget=26)


def test_budget_override_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        check_budget(GridShape(3, 3), budget=26, override=True)
    assert len(caught) == 1


def test_clamp_examples():
    assert clamp_to_box((5, 0), (1, 1), (3, 3)) == (3, 1)
    assert clamp_to_box((4, 2), (4, 2), (4, 2)) == (4, 2)
    assert clamp_to_box((2, 2), (0, 0), (6, 6)) == (2, 2)


def test_clamp_rejects_unordered_box():
    with pytest.raises(BoxOrderError):
        clamp_to_box((1, 1), (2, 0), (1, 3))


@given(points(count=4))
def test_clamp_is_monotone_and_stays_in_box(pts):
    u, v, a, b = pts
    lo, hi = meet(a, b), join(a, b)
    cu = clamp_to_box(u, lo, hi)
    assert leq(lo, cu) and leq(cu, hi)
    if leq(lo, u) and leq(u, hi):
        assert cu == u
    w = join(u, v)
    assert leq(cu, clamp_to_box(w, lo, hi))


def test_point_text_form():
    assert format_point((2, 4)) == '2,4'
    assert parse_point('2,4') == (2, 4)
    assert parse_point(' 3') == (3, )
    with pytest.raises(InvalidPointError):
        parse_point('2;4')
    with pytest.raises(InvalidPointError):
        parse_point('2,9', GridShape(7, 2))
