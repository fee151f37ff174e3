"""Deterministic O(k + n) search specialised to the hidden-point family.

Keeps bounds x_i <= a_i <= y_i and queries x_i + 1 on every unresolved
coordinate. A decrement pins one coordinate (at most k times); otherwise
every unresolved lower bound rises by one (at most n times).
"""
import logging
import warnings

from .core import IntervalState, SolveOutcome
from .kleene import ascend
from ..errors import NotFamilyResponseError
from ..lattice import format_point
from ..oracles import RememberLast, make_counting

logger = logging.getLogger(__name__)


def solve_hidden_family(oracle,
                        shape=None,
                        confirm=False,
                        prefix_inference=False,
                        record_trace=False,
                        on_step=None):
    """Recovers the hidden point of an oracle from the family F.

    Args:
        oracle (Oracle): some f^a (not checked beyond response shape).
        shape (GridShape): defaults to oracle.shape.
        confirm (bool): query the answer unless it was already seen to be
            fixed. If it is not fixed, or a response fits no f^a, fall back
            to Kleene ascent, so any monotone oracle gets a true fixed
            point.
        prefix_inference (bool): also use the prefix guards of each
            response to tighten the bounds.
        record_trace (bool): keep every (query, response) pair.
        on_step (callable): called with (t, IntervalState) after each
            query.

    Returns:
        SolveOutcome; uses at most k + n queries on family instances.

    Raises:
        NotFamilyResponseError: a response no f^a can produce (only
            without confirm).
    """
    shape = shape or oracle.shape
    counted, counter = make_counting(oracle, record_trace)
    memo = RememberLast(counted)
    state = IntervalState.initial(shape)
    try:
        while not state.solved:
            v = state.next_query()
            state = state.update(v, memo.evaluate(v), prefix_inference)
            if callable(on_step):
                on_step(counter.count, state)
    except NotFamilyResponseError as e:
        if not confirm:
            raise
        reason = str(e)
        point = None
    else:
        point = state.x
        reason = '%s is not a fixed point' % format_point(point)

    confirmed = (point is not None and memo.seen(point)
                 and memo.last[1] == point)
    fell_back = False
    if confirm and not confirmed:
        confirmed = point is not None and memo.evaluate(point) == point
        if not confirmed:
            warnings.warn('interval search failed (%s); falling back to '
                          'Kleene ascent' % reason)
            fell_back = True
            point = ascend(memo, shape, shape.bottom)
            confirmed = True
    logger.debug('interval search reached %s in %d queries',
                 format_point(point), counter.count)
    return SolveOutcome(point, counter.count, counted.trace, confirmed,
                        fell_back)
