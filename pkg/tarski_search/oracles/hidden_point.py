"""The hidden-point family F = {f^a : a in L_n^k}.

f^a pushes the first coordinate that is too high down by one and the first
coordinate that is too low up by one:

    f^a_i(v) = v_i - 1  if v_i > a_i and v_j <= a_j for all j < i
               v_i + 1  if v_i < a_i and v_j >= a_j for all j < i
               v_i      otherwise

Every f^a is monotone and its only fixed point is a.
"""
import numpy as np

from .base import Oracle
from ..lattice import Point, format_point


def eval_hidden_point(inst, v: Point) -> Point:
    """Evaluates f^a(v) for the instance's hidden point a."""
    v = inst.shape.validate(v)
    return _eval(inst.a, v)


def _eval(a, v):
    out = list(v)
    prefix_le = prefix_ge = True
    for i, (vi, ai) in enumerate(zip(v, a)):
        if vi > ai and prefix_le:
            out[i] = vi - 1
        elif vi < ai and prefix_ge:
            out[i] = vi + 1
        prefix_le = prefix_le and vi <= ai
        prefix_ge = prefix_ge and vi >= ai
        if not (prefix_le or prefix_ge):
            break
    return tuple(out)


def hidden_point_kernel(V, A):
    """Vectorised f^a(v) over broadcastable arrays of queries and hidden
    points.

    Args:
        V (ndarray<..., k>): query points.
        A (ndarray<..., k>): hidden points.

    Returns:
        ndarray<..., k> with f^A(V) row by row.
    """
    V, A = np.broadcast_arrays(np.asarray(V, dtype=np.int64),
                               np.asarray(A, dtype=np.int64))
    gt = V > A
    lt = V < A
    lead = np.ones(V.shape[:-1] + (1, ), dtype=bool)
    # prefix_le[..., i] is true iff v_j <= a_j for every j < i
    prefix_le = np.concatenate(
        [lead, np.logical_and.accumulate(~gt, axis=-1)[..., :-1]], -1)
    prefix_ge = np.concatenate(
        [lead, np.logical_and.accumulate(~lt, axis=-1)[..., :-1]], -1)
    dec = gt & prefix_le
    inc = lt & prefix_ge
    return V + inc.astype(np.int64) - dec.astype(np.int64)


class HiddenPointInstance(Oracle):
    """The function f^a on a given grid."""

    kind = 'hidden-point'

    def __init__(self, shape, a):
        super(HiddenPointInstance, self).__init__(shape)
        self.a = shape.validate(a)

    @classmethod
    def random(cls, shape, rng):
        """Draws a uniformly from L_n^k with a numpy Generator."""
        return cls(shape, rng.integers(0, shape.n, size=shape.k).tolist())

    def evaluate(self, v):
        return _eval(self.a, v)

    def evaluate_batch(self, V):
        V = np.asarray(V, dtype=np.int64).reshape(-1, self.shape.k)
        return hidden_point_kernel(V, np.asarray(self.a)[None])

    def to_dict(self):
        return dict(kind=self.kind,
                    n=self.shape.n,
                    k=self.shape.k,
                    a=list(self.a))

    def __eq__(self, other):
        return (isinstance(other, HiddenPointInstance)
                and self.shape == other.shape and self.a == other.a)

    def __hash__(self):
        return hash((self.shape, self.a))

    def __repr__(self):
        return 'HiddenPointInstance(n=%d, k=%d, a=%s)' % (
            self.shape.n, self.shape.k, format_point(self.a))
