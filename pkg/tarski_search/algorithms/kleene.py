"""Path following (Kleene iteration) from the bottom or the top of the grid.

Starting at 0 and applying f repeatedly climbs a chain that ends in the
least fixed point; every step raises at least one coordinate, so at most
k(n-1) + 1 queries are needed. Descent from (n-1, ..., n-1) is symmetric and
ends in the greatest fixed point.
"""
import logging

from .core import SolveOutcome
from ..errors import NotMonotoneError
from ..lattice import format_point, leq
from ..oracles import make_counting

logger = logging.getLogger(__name__)


def _iterate(oracle, shape, v, ascending=True):
    limit = shape.k * (shape.n - 1) + 1
    for _ in range(limit):
        w = oracle.evaluate(v)
        if w == v:
            return v
        if not (leq(v, w) if ascending else leq(w, v)):
            raise NotMonotoneError(
                'f(%s) = %s breaks the %s chain; the oracle is not monotone'
                % (format_point(v), format_point(w),
                   'ascending' if ascending else 'descending'))
        v = w
    raise NotMonotoneError('no fixed point after %d queries; the oracle is '
                           'not monotone' % limit)


def ascend(oracle, shape, start):
    """Iterates f from `start` upwards on an already counting oracle."""
    return _iterate(oracle, shape, shape.validate(start), ascending=True)


def descend(oracle, shape, start):
    return _iterate(oracle, shape, shape.validate(start), ascending=False)


def kleene_from_bottom(oracle, shape=None, start=None, record_trace=False):
    """Finds the least fixed point of a monotone oracle.

    Args:
        oracle (Oracle): monotone function on the grid (not checked).
        shape (GridShape): grid shape, defaults to oracle.shape.
        start (tuple<k>): starting point with start <= f(start); defaults
            to the bottom of the grid.
        record_trace (bool): keep every (query, response) pair.

    Returns:
        SolveOutcome.
    """
    shape = shape or oracle.shape
    counted, counter = make_counting(oracle, record_trace)
    point = ascend(counted, shape, start or shape.bottom)
    logger.debug('kleene ascent reached %s in %d queries',
                 format_point(point), counter.count)
    return SolveOutcome(point, counter.count, counted.trace, confirmed=True)


def kleene_from_top(oracle, shape=None, start=None, record_trace=False):
    """Finds the greatest fixed point of a monotone oracle by descent."""
    shape = shape or oracle.shape
    counted, counter = make_counting(oracle, record_trace)
    point = descend(counted, shape, start or shape.top)
    logger.debug('kleene descent reached %s in %d queries',
                 format_point(point), counter.count)
    return SolveOutcome(point, counter.count, counted.trace, confirmed=True)
