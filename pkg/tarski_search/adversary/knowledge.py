"""Knowledge tracking for queries to a hidden-point function on {0,1}^k.

After each query the set I_t of coordinates of a that are known for certain
grows by Delta_t(0) and Delta_t(1). For bit b, c_t(b) is the one coordinate
with v_i = b that the response flipped to 1 - b, if any. Every unknown
coordinate with v_i = b up to and including c_t(b) is learned: coordinates
before c_t(b) must equal b (otherwise they would have been flipped first)
and c_t(b) itself equals 1 - b. Without a flip, all unknown coordinates
with v_i = b equal b.

Indices are 0-based here; reports and files use 1-based coordinates.
"""
import logging

import numpy as np

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional

from ..errors import (BudgetExceededError, InconsistentHistoryError,
                      InvalidPointError, NotFamilyResponseError)
from ..lattice import GridShape, format_point, points_array
from ..oracles import hidden_point_kernel

logger = logging.getLogger(__name__)

# brute-force consistency enumeration is limited to 2**12 candidates
CONSISTENCY_LIMIT_K = 12


@dataclass(frozen=True)
class KnowledgeState:
    """Coordinates of the hidden point known with certainty.

    `known` maps coordinate index to bit. States are never mutated;
    update_knowledge returns a new one.
    """
    k: int
    known: Dict[int, int] = field(default_factory=dict)

    @property
    def indices(self) -> FrozenSet[int]:
        return frozenset(self.known)

    @property
    def complete(self):
        return len(self.known) == self.k

    def __len__(self):
        return len(self.known)

    def __contains__(self, i):
        return i in self.known

    def report(self):
        """Known bits keyed by 1-based coordinate."""
        return {i + 1: b for i, b in sorted(self.known.items())}


def _check_bits(v, response):
    if len(v) != len(response):
        raise InvalidPointError('query %s and response %s differ in length' %
                                (format_point(v), format_point(response)))
    for p in (v, response):
        if any(c not in (0, 1) for c in p):
            raise InvalidPointError('%s is not a hypercube point' %
                                    format_point(p))


def c_index(v, response, b) -> Optional[int]:
    """The coordinate i with v_i = b flipped to 1 - b, or None."""
    _check_bits(v, response)
    flipped = [i for i, (vi, ri) in enumerate(zip(v, response))
               if vi == b and ri == 1 - b]
    if len(flipped) > 1:
        raise NotFamilyResponseError(
            'response %s to %s flips coordinates %s with value %d; a '
            'hidden-point function flips at most one' %
            (format_point(response), format_point(v),
             format_point(i + 1 for i in flipped), b))
    return flipped[0] if flipped else None


def delta_set(state, v, response, b) -> FrozenSet[int]:
    """Unknown coordinates with v_i = b up to and including c_t(b)."""
    c = c_index(v, response, b)
    cutoff = len(v) - 1 if c is None else c
    return frozenset(i for i in range(cutoff + 1)
                     if v[i] == b and i not in state.known)


def update_knowledge(state, v, response) -> KnowledgeState:
    """Adds Delta_t(0) and Delta_t(1) to the known coordinates."""
    if len(v) != state.k:
        raise InvalidPointError('query %s has %d coordinates, expected %d' %
                                (format_point(v), len(v), state.k))
    known = dict(state.known)
    for b in (0, 1):
        c = c_index(v, response, b)
        if c is not None and c in state.known and state.known[c] != 1 - b:
            raise InconsistentHistoryError(
                'coordinate %d was flipped from %d but a_%d = %d is known' %
                (c + 1, b, c + 1, state.known[c]))
        for i in delta_set(state, v, response, b):
            known[i] = 1 - b if i == c else b
    return KnowledgeState(state.k, known)


def consistent_candidates(k, history, limit_k=CONSISTENCY_LIMIT_K):
    """All a in {0,1}^k with f^a(v) = r for every (v, r) in history.

    Returns:
        ndarray<M, k> of candidates in lexicographic order.
    """
    if k > limit_k:
        raise BudgetExceededError(
            'consistency enumeration is limited to k <= %d' % limit_k,
            size=2**k,
            budget=2**limit_k)
    A = points_array(GridShape(2, k))
    mask = np.ones(len(A), dtype=bool)
    for v, r in history:
        mask &= (hidden_point_kernel(np.asarray(v)[None], A) == np.asarray(r)
                 ).all(-1)
    logger.debug('%d of %d hidden points consistent after %d queries',
                 mask.sum(), len(A), len(history))
    return A[mask]


def knowledge_matches_candidates(state, candidates):
    """True iff the known coordinates are exactly those on which all
    candidates agree, with the recorded values."""
    candidates = np.asarray(candidates)
    if len(candidates) == 0:
        return False
    for i in range(state.k):
        values = set(candidates[:, i].tolist())
        if i in state.known:
            if values != {state.known[i]}:
                return False
        elif len(values) != 2:
            return False
    return True
