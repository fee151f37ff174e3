"""Query strategies for the hypercube knowledge experiments.

A strategy is called as strategy(state, history, rng) where history is the
list of (query, response) pairs so far, and returns the next query or None
to stop.
"""
import json

from ..errors import InstanceFormatError
from ..lattice import parse_point


def _fill(state, unknown_bit):
    return tuple(state.known.get(i, unknown_bit(i)) for i in range(state.k))


def uniform_random(state, history, rng):
    """Learned coordinates take their known values, the rest are fair
    coin flips."""
    bits = rng.integers(0, 2, size=state.k)
    return _fill(state, lambda i: int(bits[i]))


def zeros_then_flip(state, history, rng=None):
    """Deterministic sweep: unknown coordinates are all 0 on even steps and
    all 1 on odd steps."""
    t = len(history)
    return _fill(state, lambda i: t % 2)


def path_follow(state, history, rng=None):
    """Queries the bottom first, then always the previous response."""
    if not history:
        return (0, ) * state.k
    return history[-1][1]


class ReplayStrategy(object):
    """Replays a fixed list of queries, then stops."""

    def __init__(self, queries):
        self.queries = [tuple(int(c) for c in q) for q in queries]

    def __call__(self, state, history, rng=None):
        t = len(history)
        if t >= len(self.queries):
            return None
        return self.queries[t]

    def __repr__(self):
        return 'ReplayStrategy(%d queries)' % len(self.queries)


def load_replay(path):
    """Reads a replay file: a JSON list of points, each a list of ints or a
    comma separated string."""
    with open(path, encoding='utf-8') as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as e:
            raise InstanceFormatError('%s: %s' % (path, e.msg), line=e.lineno)
        except UnicodeDecodeError:
            raise InstanceFormatError('%s is not valid UTF-8' % path)
    if not isinstance(doc, list):
        raise InstanceFormatError('%s: expected a list of points' % path)
    queries = []
    for i, q in enumerate(doc):
        if isinstance(q, str):
            queries.append(parse_point(q))
        elif isinstance(q, list) and all(isinstance(c, int) for c in q):
            queries.append(tuple(q))
        else:
            raise InstanceFormatError('%s: bad point %r' % (path, q),
                                      field='[%d]' % i)
    return ReplayStrategy(queries)


STRATEGIES = {
    'uniform-random': uniform_random,
    'all-zeros-then-flip': zeros_then_flip,
    'path-follow': path_follow,
}


def get_strategy(name):
    """Looks up a built-in strategy, or loads `replay:<file>`."""
    if name.startswith('replay:'):
        return load_replay(name[len('replay:'):])
    try:
        return STRATEGIES[name]
    except KeyError:
        raise ValueError('unknown strategy %r (expected one of %s or '
                         'replay:<file>)' % (name, ', '.join(STRATEGIES)))
