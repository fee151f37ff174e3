"""Response fan-out of the hidden-point family and the leaf-count bound.

Whatever the hidden point, f^a(v) differs from v in at most one increment
and at most one decrement, so a query has at most (k+1)^2 possible answers.
A deterministic algorithm is then a decision tree of that fan-out which
needs a leaf for every hidden point it solves.
"""
import math

import numpy as np

from ..lattice import EXHAUSTIVE_BUDGET, points_array
from ..oracles import hidden_point_kernel


def enumerate_Qv(shape, v, budget=EXHAUSTIVE_BUDGET, override=False):
    """The set {f^a(v) : a in L_n^k} of possible responses to query v."""
    v = shape.validate(v)
    A = points_array(shape, budget, override)
    R = np.unique(hidden_point_kernel(np.asarray(v)[None], A), axis=0)
    return set(tuple(int(c) for c in r) for r in R)


def fanout_bound(k):
    return (k + 1)**2


def decision_tree_leaf_bound(n, k, success=0.8):
    """Fewest leaves of a decision tree that finds a on a `success`
    fraction of the n^k hidden points."""
    if not 0 < success <= 1:
        raise ValueError('success must be in (0, 1], got %r' % success)
    return int(math.ceil(success * n**k))


def average_depth_lower_bound(n, k, success=0.8):
    """Lower bound on the average number of queries under uniform a:
    log base (k+1)^2 of success * n^k, minus one."""
    leaves = decision_tree_leaf_bound(n, k, success)
    return max(0.0, math.log(leaves) / math.log(fanout_bound(k)) - 1)
