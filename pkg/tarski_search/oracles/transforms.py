"""Oracle transformations: the clamp lift from the hypercube to the grid and
restriction of an oracle to a box."""
import numpy as np

from .base import Oracle
from ..errors import BoxOrderError, ShapeMismatchError
from ..lattice import GridShape, clamp_to_box, format_point, leq


class ClampLiftOracle(Oracle):
    """f(v) = f*(g(v)) with g_i(v) = min(v_i, 1).

    Lifts a function f* on {0,1}^k to L_n^k. Each outer query costs exactly
    one inner query. Monotonicity is preserved and every fixed point of the
    lift is a fixed point of f*.
    """

    kind = 'clamp-lift'

    def __init__(self, inner, n):
        if inner.shape.n != 2:
            raise ShapeMismatchError('clamp lift needs a hypercube oracle '
                                     '(n=2), got %s' % (inner.shape, ))
        if n < 2:
            raise ShapeMismatchError('clamp lift needs n >= 2, got %d' % n)
        super(ClampLiftOracle, self).__init__(GridShape(n, inner.shape.k))
        self.inner = inner

    def evaluate(self, v):
        return self.inner.evaluate(tuple(min(c, 1) for c in v))

    def evaluate_batch(self, V):
        V = np.asarray(V, dtype=np.int64).reshape(-1, self.shape.k)
        return self.inner.evaluate_batch(np.minimum(V, 1))

    def to_dict(self):
        return dict(kind=self.kind, n=self.shape.n, inner=self.inner.to_dict())

    def __repr__(self):
        return 'ClampLiftOracle(n=%d, inner=%r)' % (self.shape.n, self.inner)


def lift_clamp(inner, n):
    return ClampLiftOracle(inner, n)


class BoxRestrictedOracle(Oracle):
    """v -> clamp_to_box(f(v), lo, hi).

    Maps the box into itself and stays monotone when f is. One outer query
    per restricted query.
    """

    def __init__(self, outer, lo, hi):
        super(BoxRestrictedOracle, self).__init__(outer.shape)
        lo = outer.shape.validate(lo)
        hi = outer.shape.validate(hi)
        if not leq(lo, hi):
            raise BoxOrderError('box corners %s and %s are not ordered' %
                                (format_point(lo), format_point(hi)))
        self.outer = outer
        self.lo = lo
        self.hi = hi

    def evaluate(self, v):
        return clamp_to_box(self.outer.evaluate(v), self.lo, self.hi)

    def evaluate_batch(self, V):
        return np.clip(self.outer.evaluate_batch(V), self.lo, self.hi)

    def __repr__(self):
        return 'BoxRestrictedOracle(lo=%s, hi=%s, outer=%r)' % (
            format_point(self.lo), format_point(self.hi), self.outer)


def restrict_box(outer, lo, hi):
    return BoxRestrictedOracle(outer, lo, hi)
