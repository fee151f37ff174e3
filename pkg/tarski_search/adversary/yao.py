"""Average query counts of a solver under the uniform distribution on F.

The mean over uniform a is the empirical cost D of the best deterministic
algorithm against that distribution, which by the minimax principle bounds
randomised query complexity from below (2R >= D).
"""
import logging
import time

import numpy as np

from dataclasses import dataclass, field
from typing import List, Optional

from ..algorithms import get_solver
from ..errors import TarskiSearchError
from ..lattice import EXHAUSTIVE_BUDGET, Point, format_point, iterate_points
from ..oracles import HiddenPointInstance
from ..utils import map_trials, trial_rng

logger = logging.getLogger(__name__)

MODES = ('exhaustive', 'sampled')


@dataclass
class TrialRecord:
    """One solver run on one instance.

    `correct` comes from an uncounted evaluation of the instance at the
    returned point.
    """
    instance: str
    queries: int
    correct: bool
    wall_ns: int = 0
    point: Optional[Point] = None
    error: Optional[str] = None


@dataclass
class YaoResult:
    solver: str
    records: List[TrialRecord] = field(default_factory=list)

    @property
    def trials(self):
        return len(self.records)

    @property
    def failures(self):
        return sum(not r.correct for r in self.records)

    def _queries(self):
        return np.array([r.queries for r in self.records if r.error is None],
                        dtype=np.int64)

    @property
    def mean(self):
        q = self._queries()
        return float(q.mean()) if len(q) else float('nan')

    @property
    def max(self):
        q = self._queries()
        return int(q.max()) if len(q) else 0

    def __str__(self):
        return '%s: mean %.4f, max %d over %d trials, %d failures' % (
            self.solver, self.mean, self.max, self.trials, self.failures)


def family_instances(shape,
                     mode='exhaustive',
                     trials=None,
                     seed=None,
                     budget=EXHAUSTIVE_BUDGET,
                     override=False):
    """Hidden points to run on, as (instance id, a) pairs.

    Exhaustive mode lists every a in lexicographic order with the point as
    its id. Sampled mode draws trial i's a from trial_rng(seed, i) and uses
    "seed+i" as its id.
    """
    if mode == 'exhaustive':
        return [(format_point(a), a)
                for a in iterate_points(shape, budget, override)]
    if mode != 'sampled':
        raise ValueError('unknown mode %r (expected one of %s)' %
                         (mode, ', '.join(MODES)))
    if seed is None or trials is None or trials < 1:
        raise ValueError('sampled mode needs a seed and at least one trial')
    out = []
    for i in range(trials):
        rng = trial_rng(seed, i)
        a = tuple(int(c) for c in rng.integers(0, shape.n, size=shape.k))
        out.append(('%d+%d' % (seed, i), a))
    return out


def run_trial(args):
    """Solves one hidden-point instance; args is (solver name, shape,
    instance id, a, solver keyword arguments)."""
    name, shape, instance, a, solver_kwargs = args
    solver = get_solver(name)
    inst = HiddenPointInstance(shape, a)
    start = time.perf_counter_ns()
    try:
        outcome = solver(inst, shape, **solver_kwargs)
    except TarskiSearchError as e:
        logger.warning('%s failed on %s: %s', name, instance, e)
        return TrialRecord(instance, 0, False,
                           time.perf_counter_ns() - start, error=str(e))
    wall_ns = time.perf_counter_ns() - start
    correct = inst.evaluate(outcome.point) == outcome.point
    if not correct:
        logger.warning('%s returned %s on %s, which is not a fixed point',
                       name, format_point(outcome.point), instance)
    return TrialRecord(instance, outcome.queries, correct, wall_ns,
                       outcome.point)


def yao_average_queries(solver,
                        shape,
                        mode='exhaustive',
                        trials=None,
                        seed=None,
                        instances=None,
                        budget=EXHAUSTIVE_BUDGET,
                        override=False,
                        workers=1,
                        progress=False,
                        **solver_kwargs):
    """Mean query count of a named solver over uniform hidden points.

    Args:
        solver (str): solver name, see algorithms.SOLVERS.
        shape (GridShape): grid shape.
        mode (str): 'exhaustive' (every a) or 'sampled' (trials draws).
        trials (int): number of draws in sampled mode.
        seed (int): seed in sampled mode.
        instances (list): explicit hidden points, overriding mode.
        budget (int): exhaustive budget.
        override (bool): run past the budget with a warning.
        workers (int): worker processes.
        progress (bool): show a progress bar.
        **solver_kwargs: passed on to the solver.

    Returns:
        YaoResult with one record per instance, in instance order.
    """
    get_solver(solver)
    if instances is not None:
        pairs = [(format_point(a), shape.validate(a)) for a in instances]
    else:
        pairs = family_instances(shape, mode, trials, seed, budget, override)
    args = [(solver, shape, i, a, solver_kwargs) for i, a in pairs]
    records = map_trials(run_trial,
                         args,
                         workers=workers,
                         progress=progress,
                         desc=solver)
    result = YaoResult(solver, records)
    if result.failures:
        logger.warning('%s: %d of %d trials did not return a fixed point',
                       solver, result.failures, result.trials)
    return result
