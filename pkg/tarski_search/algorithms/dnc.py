"""Recursive divide and conquer: binary search on the last free coordinate.

For a box B (coordinates >= d pinned) the solver looks for a fixed point of
h_B(v) = clamp(f(v), B). It fixes coordinate d-1 at the midpoint m of its
range, solves the (d-1)-dimensional slice recursively and reads coordinate
d-1 of h_B at the slice solution x:

    equal to m    x is a fixed point of h_B
    above m       x <= h_B(x), so [h_B(x), hi] holds a fixed point
    below m       h_B(x) <= x, so [lo, h_B(x)] holds a fixed point

The new box starts at the response rather than at m + 1 (or ends at it
rather than at m - 1). Since h_B(x) moved past m, this box is never larger,
and a response that jumps far cuts the search short: the constant map to
n - 1 on L_n^1 (n >= 2) takes two queries.

For monotone f the clamped and raw values agree on every box the search
visits, so the answer is a fixed point of f. The answer is confirmed against
the raw response; if that fails (the oracle was not monotone) the search
falls back to Kleene ascent inside the last box.
"""
import logging
import math
import warnings

from .core import SolveOutcome
from .kleene import ascend
from ..lattice import format_point
from ..oracles import RememberLast, make_counting, restrict_box

logger = logging.getLogger(__name__)

# log a warning above this many worst-case queries
LARGE_SEARCH = 10**7


def _solve(memo, lo, hi, d):
    """Returns (x, lo, hi): a fixed point x of restrict_box(memo, lo, hi)
    and the box the search ended in. Coordinates >= d of lo and hi agree."""
    if d == 0:
        return lo, lo, hi
    box = restrict_box(memo, lo, hi)
    while True:
        m = (lo[d - 1] + hi[d - 1]) // 2
        sub_lo = lo[:d - 1] + (m, ) + lo[d:]
        sub_hi = hi[:d - 1] + (m, ) + hi[d:]
        x, _, _ = _solve(memo, sub_lo, sub_hi, d - 1)
        # x was the last point queried (or is the first one at d == 1)
        y = box.evaluate(x)
        c = y[d - 1]
        if c == m:
            return x, lo, hi
        if c > m:
            lo = y
        else:
            hi = y
        box = restrict_box(memo, lo, hi)


def dnc_fixed_point(oracle, shape=None, confirm=True, record_trace=False):
    """Finds a fixed point of a monotone oracle by divide and conquer.

    On k = 1 this is binary search and uses at most floor(log2 n) + 1
    queries.

    Args:
        oracle (Oracle): monotone function on the grid.
        shape (GridShape): defaults to oracle.shape.
        confirm (bool): check the answer against f and fall back to Kleene
            ascent in the final box if the check fails. The check re-reads
            the last response, so it only costs a query when the answer
            was not the last point queried.
        record_trace (bool): keep every (query, response) pair.

    Returns:
        SolveOutcome.
    """
    shape = shape or oracle.shape
    worst = (math.floor(math.log2(shape.n)) + 1)**shape.k
    if worst > LARGE_SEARCH:
        logger.warning('divide and conquer on %s may need up to %d queries',
                       shape, worst)
    counted, counter = make_counting(oracle, record_trace)
    memo = RememberLast(counted)
    point, lo, hi = _solve(memo, shape.bottom, shape.top, shape.k)

    confirmed = fell_back = False
    if confirm:
        confirmed = memo.evaluate(point) == point
        if not confirmed:
            warnings.warn('divide and conquer answer %s is not a fixed point; '
                          'falling back to Kleene ascent in box [%s, %s]' %
                          (format_point(point), format_point(lo),
                           format_point(hi)))
            fell_back = True
            point = ascend(restrict_box(memo, lo, hi), shape, lo)
            confirmed = memo.evaluate(point) == point
    logger.debug('divide and conquer reached %s in %d queries',
                 format_point(point), counter.count)
    return SolveOutcome(point, counter.count, counted.trace, confirmed,
                        fell_back)
