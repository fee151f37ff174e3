"""Brute-force ground truth on small grids.

Monotonicity checks, fixed point enumeration, the lattice structure of the
fixed point set, and exhaustive enumeration of monotone functions for
cross-checking the solvers.
"""
import json
import logging

import numpy as np

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import BudgetExceededError, ShapeMismatchError
from .lattice import (EXHAUSTIVE_BUDGET, Point, format_point, join,
                      points_array)
from .oracles import TableInstance

logger = logging.getLogger(__name__)

# enumerate_monotone_functions refuses grids with more points than this
MONOTONE_ENUMERATION_LIMIT = 9


@dataclass(frozen=True)
class MonotonicityReport:
    monotone: bool
    witness: Optional[Tuple[Point, Point]] = None

    def to_dict(self):
        witness = None
        if self.witness is not None:
            u, v = self.witness
            witness = dict(u=list(u), v=list(v))
        return dict(monotone=self.monotone, witness=witness)

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(',', ':'))

    def __str__(self):
        if self.monotone:
            return 'monotone'
        u, v = self.witness
        return 'not monotone: %s <= %s but f(%s) is not <= f(%s)' % (
            format_point(u), format_point(v), format_point(u),
            format_point(v))


def _tabulate(inst, shape, budget, override):
    shape = shape or inst.shape
    P = points_array(shape, budget, override)
    return shape, P, inst.evaluate_batch(P)


def _first_cover_violation(shape, P, F):
    """Smallest rank u such that f(u) is not <= f(u + e_i) for some i."""
    first = None
    for i, stride in enumerate(shape.strides):
        idx = np.flatnonzero(P[:, i] < shape.n - 1)
        bad = ~(F[idx] <= F[idx + stride]).all(-1)
        if bad.any():
            u = int(idx[np.argmax(bad)])
            first = u if first is None else min(first, u)
    return first


def check_monotone(inst, shape=None, budget=EXHAUSTIVE_BUDGET,
                   override=False) -> MonotonicityReport:
    """Checks u <= v => f(u) <= f(v) over the whole grid.

    Monotonicity on the cover pairs (u, u + e_i) is equivalent to
    monotonicity on all comparable pairs, so the clean case only looks at
    covers. When there is a violation, the comparable pairs are scanned in
    lexicographic pair order and the first violating pair is returned.
    """
    shape, P, F = _tabulate(inst, shape, budget, override)
    last_u = _first_cover_violation(shape, P, F)
    if last_u is None:
        return MonotonicityReport(True)
    for u in range(last_u + 1):
        above = (P >= P[u]).all(-1)
        bad = above & ~(F >= F[u]).all(-1)
        if bad.any():
            v = int(np.argmax(bad))
            witness = (shape.unrank(u), shape.unrank(v))
            logger.debug('monotonicity violated at %s <= %s',
                         format_point(witness[0]), format_point(witness[1]))
            return MonotonicityReport(False, witness)
    raise AssertionError('cover violation at rank %d has no pair witness' %
                         last_u)


def fixed_points_bruteforce(inst,
                            shape=None,
                            budget=EXHAUSTIVE_BUDGET,
                            override=False):
    """The exact set {v : f(v) = v}."""
    shape, P, F = _tabulate(inst, shape, budget, override)
    fixed = np.flatnonzero((F == P).all(-1))
    return set(tuple(int(c) for c in P[r]) for r in fixed)


def _has_extremum(mask, le):
    """True iff the points selected by mask have a greatest element
    (le[i, j] means point i <= point j)."""
    if not mask.any():
        return False
    return bool((mask & le[mask].all(0)).any())


def check_tarski_lattice(P) -> bool:
    """True iff P is non-empty and every pair in P has a greatest lower
    bound and a least upper bound inside P (for the induced order).

    Bounds inside P need not be the grid's meet and join. The check is
    cubic in |P|.
    """
    pts = sorted(set(tuple(p) for p in P))
    if not pts:
        return False
    if len(set(len(p) for p in pts)) != 1:
        raise ShapeMismatchError('points of different dimensions')
    A = np.array(pts, dtype=np.int64)
    le = (A[:, None, :] <= A[None, :, :]).all(-1)
    ge = le.T
    m = len(pts)
    for i in range(m):
        for j in range(i + 1, m):
            lower = le[:, i] & le[:, j]
            if not _has_extremum(lower, le):
                return False
            upper = ge[:, i] & ge[:, j]
            if not _has_extremum(upper, ge):
                return False
    return True


def enumerate_monotone_functions(shape,
                                 limit=MONOTONE_ENUMERATION_LIMIT):
    """Yields every monotone f: L_n^k -> L_n^k exactly once.

    Images are assigned depth first in lexicographic order of the inputs.
    Lexicographic order extends <=, so the lower covers of an input are
    already assigned and its image only has to dominate their join.
    """
    if shape.size > limit:
        raise BudgetExceededError(
            'monotone function enumeration is limited to %d points, %s has '
            '%d' % (limit, shape, shape.size),
            size=shape.size,
            budget=limit)
    P = [tuple(int(c) for c in p) for p in points_array(shape)]
    N = len(P)
    strides = shape.strides
    # ranks w with P[w] >= P[l], in lexicographic order
    above = [[w for w in range(N) if all(a >= b for a, b in zip(P[w], P[l]))]
             for l in range(N)]
    covers = [[r - s for i, s in enumerate(strides) if P[r][i] > 0]
              for r in range(N)]
    images = [0] * N

    def assign(r):
        if r == N:
            yield TableInstance(shape, [P[w] for w in images])
            return
        lower = shape.bottom
        for c in covers[r]:
            lower = join(lower, P[images[c]])
        for w in above[shape.rank(lower)]:
            images[r] = w
            yield from assign(r + 1)

    return assign(0)
