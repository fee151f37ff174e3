"""Base oracle and the query accounting wrappers."""
import numpy as np

from ..lattice import Point


class Oracle(object):
    """Query access to a function f: L_n^k -> L_n^k.

    Subclasses implement `evaluate`. Calling the oracle validates the query
    point first; `evaluate_batch` skips validation and is meant for the
    brute-force checks, which feed it whole grids at once.
    """

    def __init__(self, shape):
        self.shape = shape

    def evaluate(self, v: Point) -> Point:
        """Evaluates f at a validated point.

        Args:
            v (tuple<k>): query point.

        Returns:
            f(v) (tuple<k>).
        """
        raise NotImplementedError

    def evaluate_batch(self, V):
        """Evaluates f on every row of V.

        Args:
            V (ndarray<N, k>): query points, one per row.

        Returns:
            ndarray<N, k> with f of each row.
        """
        V = np.asarray(V, dtype=np.int64).reshape(-1, self.shape.k)
        out = [self.evaluate(tuple(int(c) for c in row)) for row in V]
        return np.array(out, dtype=np.int64).reshape(-1, self.shape.k)

    def __call__(self, v) -> Point:
        return self.evaluate(self.shape.validate(v))


class FunctionOracle(Oracle):
    """Wraps a plain callable mapping tuples to tuples."""

    def __init__(self, shape, fn):
        super(FunctionOracle, self).__init__(shape)
        self.fn = fn

    def evaluate(self, v):
        return tuple(int(c) for c in self.fn(v))


def identity_oracle(shape):
    return FunctionOracle(shape, lambda v: v)


class QueryCounter(object):
    """Number of oracle evaluations made through a counting wrapper."""

    def __init__(self):
        self.count = 0

    def increment(self, by=1):
        self.count += by

    def __repr__(self):
        return 'QueryCounter(count=%d)' % self.count


class CountingOracle(Oracle):
    """Forwards evaluations and charges one query for each.

    There is no caching: asking for the same point twice costs two queries.
    With record_trace, every (query, response) pair is kept in `trace`.
    """

    def __init__(self, oracle, counter=None, record_trace=False):
        super(CountingOracle, self).__init__(oracle.shape)
        self.oracle = oracle
        self.counter = counter if counter is not None else QueryCounter()
        self.trace = [] if record_trace else None

    def evaluate(self, v):
        self.counter.increment()
        response = self.oracle.evaluate(v)
        if self.trace is not None:
            self.trace.append((v, response))
        return response

    def evaluate_batch(self, V):
        out = self.oracle.evaluate_batch(V)
        self.counter.increment(out.shape[0])
        if self.trace is not None:
            self.trace.extend(
                (tuple(int(c) for c in v), tuple(int(c) for c in r))
                for v, r in zip(np.asarray(V).reshape(out.shape), out))
        return out


def make_counting(oracle, record_trace=False):
    """Wraps `oracle` with a fresh counter.

    Returns:
        (CountingOracle, QueryCounter) pair.
    """
    counted = CountingOracle(oracle, record_trace=record_trace)
    return counted, counted.counter


class RememberLast(Oracle):
    """One-entry memo in front of an oracle.

    Re-evaluating the most recent query point is served from memory, so a
    solver can re-read its last response without paying for it again.
    """

    def __init__(self, oracle):
        super(RememberLast, self).__init__(oracle.shape)
        self.oracle = oracle
        self.last = None

    def seen(self, v):
        return self.last is not None and self.last[0] == tuple(v)

    def evaluate(self, v):
        v = tuple(v)
        if self.seen(v):
            return self.last[1]
        response = self.oracle.evaluate(v)
        self.last = (v, response)
        return response
