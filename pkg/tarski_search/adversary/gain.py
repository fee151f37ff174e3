"""Per-step information gain of query strategies against uniform f^a.

For a uniform hidden point a in {0,1}^k the expected number of coordinates
learned per query is at most 4, and the chance that a single Delta_t(b) is
larger than C is at most 2^-C. GainStats collects what the simulations
actually measure so both can be compared against their bounds.
"""
import logging
import warnings

import numpy as np

from ..errors import InconsistentHistoryError
from ..lattice import GridShape, format_point
from ..oracles import HiddenPointInstance
from ..utils import map_trials, rollout, trial_rng, write_csv
from .knowledge import KnowledgeState, delta_set, update_knowledge

logger = logging.getLogger(__name__)

GAIN_HEADER = ('trial', 'step', 'gain', 'delta0', 'delta1')


class GainStats(object):
    ''' Per-step gains |I_t| - |I_{t-1}| and |Delta_t(0)|, |Delta_t(1)|
        for a batch of trials'''
    def __init__(self, k=None, name='GainStats'):
        self.k = k
        self.name = name
        self.samples = []
        self.complete = []
        self.curr_trial = -1

    def new_trial(self):
        '''
            Starts recording a new trial
        '''
        self.samples.append([])
        self.complete.append(False)
        self.curr_trial += 1

    def add_sample(self, gain, delta0, delta1):
        '''
            Adds the gains of one query to the current trial
        '''
        if self.curr_trial < 0:
            self.new_trial()
        if gain != delta0 + delta1 or min(delta0, delta1) < 0:
            raise ValueError('gain %d does not split into %d + %d' %
                             (gain, delta0, delta1))
        self.samples[self.curr_trial].append((gain, delta0, delta1))

    def append_trial(self, samples, complete=True):
        self.new_trial()
        for gain, delta0, delta1 in samples:
            self.add_sample(gain, delta0, delta1)
        self.complete[self.curr_trial] = complete

    def n_samples(self):
        ''' Returns the total number of queries recorded '''
        return sum(len(s) for s in self.samples)

    def n_trials(self):
        return len(self.samples)

    def _array(self):
        flat = [s for trial in self.samples for s in trial]
        return np.array(flat, dtype=np.int64).reshape(-1, 3)

    @property
    def gains(self):
        return self._array()[:, 0]

    def knowledge(self):
        ''' Returns |I_T| at the end of each trial '''
        return np.array([sum(s[0] for s in trial) for trial in self.samples],
                        dtype=np.int64)

    def mean_gain(self):
        gains = self.gains
        return float(gains.mean()) if len(gains) else 0.0

    def max_gain(self):
        gains = self.gains
        return int(gains.max()) if len(gains) else 0

    def tail_frequency(self, C, b=None):
        '''
            Empirical Pr[|Delta_t(b)| > C] over every step, together with its
            binomial standard error. b = None pools b = 0 and b = 1.
        '''
        if b not in (None, 0, 1):
            raise ValueError('b must be 0, 1 or None, got %r' % (b, ))
        D = self._array()
        deltas = D[:, 1:].ravel() if b is None else D[:, 1 + b]
        N = len(deltas)
        if N == 0:
            return 0.0, 0.0
        p = float((deltas > C).mean())
        return p, float(np.sqrt(p * (1 - p) / N))

    def tail_table(self, max_c=8, b=None):
        ''' Rows (C, frequency, 2^-C, standard error) for C = 0..max_c '''
        rows = []
        for C in range(max_c + 1):
            p, se = self.tail_frequency(C, b)
            rows.append((C, p, 2.0**-C, se))
        return rows

    def markov_knowledge_bound(self, T):
        '''
            Fraction of trials that knew every coordinate after T queries,
            and the bound E|I_T| / k <= 4T / k it must respect.
        '''
        if self.k is None:
            raise ValueError('markov_knowledge_bound needs the dimension k')
        known = np.array([sum(s[0] for s in trial[:T])
                          for trial in self.samples])
        freq = float((known >= self.k).mean()) if len(known) else 0.0
        return freq, min(1.0, 4.0 * T / self.k)

    def rows(self):
        ''' Rows (trial, step, gain, delta0, delta1); trial and step are
            1-based '''
        for i, trial in enumerate(self.samples):
            for t, (gain, d0, d1) in enumerate(trial):
                yield (i + 1, t + 1, gain, d0, d1)

    def save(self, path):
        write_csv(path, GAIN_HEADER, self.rows())

    def summary(self):
        lines = [
            'trials: %d' % self.n_trials(),
            'queries: %d' % self.n_samples(),
            'mean gain: %.4f (bound 4)' % self.mean_gain(),
            'max gain: %d' % self.max_gain(),
            'C  Pr[|delta|>C]  2^-C  stderr',
        ]
        for C, p, bound, se in self.tail_table():
            lines.append('%d  %.5f  %.5f  %.5f' % (C, p, bound, se))
        return '\n'.join(lines)

    def __repr__(self):
        return '%s(trials=%d, queries=%d)' % (self.name, self.n_trials(),
                                             self.n_samples())


def _run_trial(args):
    strategy, k, seed, index, a, max_steps = args
    rng = trial_rng(seed, index)
    if a is None:
        a = tuple(int(b) for b in rng.integers(0, 2, size=k))
    oracle = HiddenPointInstance(GridShape(2, k), a)
    samples = []
    prev = [KnowledgeState(k)]

    def record_gain(t, v, r, state):
        d0 = len(delta_set(prev[0], v, r, 0))
        d1 = len(delta_set(prev[0], v, r, 1))
        samples.append((len(state) - len(prev[0]), d0, d1))
        prev[0] = state

    state, _ = rollout(KnowledgeState(k),
                       oracle,
                       strategy,
                       update_knowledge,
                       max_steps,
                       rng=rng,
                       breaking_condition=lambda s: s.complete,
                       on_step=record_gain)
    for i, b in state.known.items():
        if a[i] != b:
            raise InconsistentHistoryError(
                'trial %d learned a_%d = %d but a = %s' %
                (index, i + 1, b, format_point(a)))
    return samples, state.complete


def simulate_info_gain(strategy,
                       k,
                       trials,
                       seed,
                       a=None,
                       max_steps=None,
                       workers=1,
                       progress=False):
    """Runs a strategy against f^a until every coordinate of a is known.

    Args:
        strategy (callable): strategy(state, history, rng) -> query or None.
        k (int): hypercube dimension.
        trials (int): number of independent trials (>= 1).
        seed (int): trial i draws from trial_rng(seed, i).
        a (tuple<k>): fixed hidden point; drawn uniformly per trial if None.
        max_steps (int): query limit per trial, default k + 1.
        workers (int): worker processes.
        progress (bool): show a progress bar.

    Returns:
        GainStats with one trial per run, in trial order.
    """
    if trials < 1:
        raise ValueError('trials must be at least 1, got %d' % trials)
    if a is not None:
        a = GridShape(2, k).validate(a)
    if max_steps is None:
        max_steps = k + 1
    args = [(strategy, k, seed, i, a, max_steps) for i in range(trials)]
    results = map_trials(_run_trial,
                         args,
                         workers=workers,
                         progress=progress,
                         desc='info gain')
    stats = GainStats(k)
    incomplete = 0
    for samples, complete in results:
        stats.append_trial(samples, complete)
        incomplete += not complete
    if incomplete:
        msg = ('%d of %d trials stopped before every coordinate was known' %
               (incomplete, trials))
        logger.warning(msg)
        warnings.warn(msg)
    logger.info('info gain k=%d: %d trials, mean gain %.3f', k, trials,
                stats.mean_gain())
    return stats
