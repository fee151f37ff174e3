"""The grid lattice L_n^k = {0, ..., n-1}^k under the componentwise order.

Points are plain tuples of ints. They are immutable and hashable, so they can
be shared between workers and collected in sets.
"""
import itertools
import warnings

import numpy as np

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from .errors import (BoxOrderError, BudgetExceededError, InvalidPointError,
                     InvalidShapeError, ShapeMismatchError)

Point = Tuple[int, ...]

# operations that enumerate every point of the grid refuse above this size
EXHAUSTIVE_BUDGET = 2**24


@dataclass(frozen=True)
class GridShape:
    """Side length n and dimension k of the grid."""
    n: int
    k: int

    def __post_init__(self):
        if int(self.n) < 1 or int(self.k) < 1:
            raise InvalidShapeError(
                'grid shape needs n >= 1 and k >= 1, got n=%r k=%r' %
                (self.n, self.k))

    @property
    def size(self):
        """Number of points, n^k (an exact python int)."""
        return self.n**self.k

    @property
    def bottom(self) -> Point:
        return (0, ) * self.k

    @property
    def top(self) -> Point:
        return (self.n - 1, ) * self.k

    @property
    def strides(self):
        # lexicographic rank: last coordinate varies fastest
        return tuple(self.n**(self.k - 1 - i) for i in range(self.k))

    def contains(self, v) -> bool:
        return (len(v) == self.k
                and all(0 <= int(c) <= self.n - 1 for c in v))

    def validate(self, v) -> Point:
        """Returns v as a Point of this shape or raises InvalidPointError."""
        v = tuple(int(c) for c in v)
        if len(v) != self.k:
            raise InvalidPointError('point %s has %d coordinates, expected %d'
                                    % (format_point(v), len(v), self.k))
        for i, c in enumerate(v):
            if c < 0 or c > self.n - 1:
                raise InvalidPointError(
                    'coordinate %d of point %s is outside [0, %d]' %
                    (i + 1, format_point(v), self.n - 1))
        return v

    def rank(self, v) -> int:
        return sum(c * s for c, s in zip(v, self.strides))

    def unrank(self, r) -> Point:
        out = []
        for s in self.strides:
            c, r = divmod(r, s)
            out.append(c)
        return tuple(out)

    def __str__(self):
        return 'L(n=%d, k=%d)' % (self.n, self.k)


def check_budget(shape, budget=EXHAUSTIVE_BUDGET, override=False):
    """Refuses exhaustive work on grids with more than `budget` points."""
    if shape.size <= budget:
        return
    if override:
        warnings.warn('exhaustive enumeration of %d points on %s exceeds the '
                      'budget of %d' % (shape.size, shape, budget))
        return
    raise BudgetExceededError(
        '%s has %d points, more than the exhaustive budget of %d '
        '(pass override to force)' % (shape, shape.size, budget),
        size=shape.size,
        budget=budget)


def _same_length(u, v):
    if len(u) != len(v):
        raise ShapeMismatchError('points %s and %s have different dimensions'
                                 % (format_point(u), format_point(v)))


def leq(u: Point, v: Point) -> bool:
    """Componentwise order: u <= v iff u_i <= v_i for every i."""
    _same_length(u, v)
    return all(a <= b for a, b in zip(u, v))


def meet(u: Point, v: Point) -> Point:
    _same_length(u, v)
    return tuple(min(a, b) for a, b in zip(u, v))


def join(u: Point, v: Point) -> Point:
    _same_length(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def iterate_points(shape, budget=EXHAUSTIVE_BUDGET,
                   override=False) -> Iterator[Point]:
    """Yields every point of the grid once, in lexicographic order."""
    check_budget(shape, budget, override)
    return itertools.product(range(shape.n), repeat=shape.k)


def points_array(shape, budget=EXHAUSTIVE_BUDGET, override=False):
    """All points as an (n^k, k) integer array, rows in lexicographic
    order (row r is shape.unrank(r))."""
    check_budget(shape, budget, override)
    grid = np.indices((shape.n, ) * shape.k, dtype=np.int64)
    return grid.reshape(shape.k, -1).T.copy()


def clamp_to_box(v: Point, lo: Point, hi: Point) -> Point:
    """Componentwise median of (lo_i, v_i, hi_i)."""
    _same_length(v, lo)
    _same_length(lo, hi)
    if not leq(lo, hi):
        raise BoxOrderError('box corners %s and %s are not ordered' %
                            (format_point(lo), format_point(hi)))
    return tuple(min(max(c, a), b) for c, a, b in zip(v, lo, hi))


def format_point(v: Sequence[int]) -> str:
    """Text form used by flags and files, e.g. '2,4'."""
    return ','.join(str(int(c)) for c in v)


def parse_point(s: str, shape=None) -> Point:
    """Parses '2,4' into (2, 4); validates against shape when given."""
    try:
        v = tuple(int(d) for d in s.split(','))
    except (AttributeError, ValueError):
        raise InvalidPointError('cannot parse point %r; expected comma '
                                'separated integers' % (s, ))
    if shape is not None:
        v = shape.validate(v)
    return v
