"""Command-line front end.

    tarski-search solve --algo kleene --n 7 --k 2 --a 2,4
    tarski-search bench --algo kleene --algo family --n 2 --k 2 --all-a
    tarski-search adversary --k 32 --strategy uniform-random --trials 1000 --seed 1
    tarski-search verify --family --n 5 --k 3 --all-a

Exit status is 0 on success, 1 when a check or a returned point is wrong and
2 for unusable configurations.
"""
import argparse
import json
import logging
import sys

from dataclasses import dataclass
from typing import Optional, Tuple

from .adversary import (average_depth_lower_bound, family_instances,
                        get_strategy, run_trial, simulate_info_gain)
from .algorithms import SOLVERS
from .errors import (BudgetExceededError, InconsistentHistoryError,
                     InstanceFormatError, InvalidPointError,
                     InvalidShapeError, NotFamilyResponseError,
                     NotMonotoneError, ShapeMismatchError, UsageError)
from .lattice import (EXHAUSTIVE_BUDGET, GridShape, Point, format_point,
                      iterate_points, parse_point)
from .oracles import (ClampLiftOracle, HiddenPointInstance, load_instance)
from .utils import map_trials, write_csv
from .verify import (check_monotone, check_tarski_lattice,
                     fixed_points_bruteforce)

logger = logging.getLogger(__name__)

COMMANDS = ('solve', 'bench', 'adversary', 'verify')
BENCH_HEADER = ('solver', 'n', 'k', 'instance', 'queries', 'correct',
                'wall_ns')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class ExperimentConfig:
    command: str
    n: Optional[int] = None
    k: Optional[int] = None
    solvers: Tuple[str, ...] = ()
    a: Optional[Point] = None
    all_a: bool = False
    trials: Optional[int] = None
    seed: Optional[int] = None
    instance: Optional[str] = None
    table: Optional[str] = None
    family: bool = False
    strategy: str = 'uniform-random'
    out: Optional[str] = None
    trace: bool = False
    budget_override: bool = False
    workers: int = 1
    timing: bool = True
    confirm: Optional[bool] = None
    prefix_inference: bool = False
    progress: bool = False

    @classmethod
    def from_args(cls, args):
        def get(name, default=None):
            return getattr(args, name, default)

        a = get('a')
        return cls(command=args.command,
                   n=get('n'),
                   k=get('k'),
                   solvers=tuple(get('algo') or ()),
                   a=parse_point(a) if a is not None else None,
                   all_a=get('all_a', False),
                   trials=get('trials'),
                   seed=get('seed'),
                   instance=get('instance'),
                   table=get('table'),
                   family=get('family', False),
                   strategy=get('strategy', 'uniform-random'),
                   out=get('out'),
                   trace=get('trace', False),
                   budget_override=get('budget_override', False),
                   workers=get('workers', 1),
                   timing=not get('no_timing', False),
                   confirm=get('confirm'),
                   prefix_inference=get('prefix_inference', False),
                   progress=get('progress', False))

    @property
    def shape(self):
        k = self.k
        if k is None and self.a is not None:
            k = len(self.a)
        if self.n is None or k is None:
            return None
        return GridShape(self.n, k)

    @property
    def mode(self):
        """Where instances come from: file, explicit, exhaustive or
        sampled."""
        if self.instance is not None or self.table is not None:
            return 'file'
        if self.a is not None:
            return 'explicit'
        if self.all_a:
            return 'exhaustive'
        if self.trials is not None:
            return 'sampled'
        return None

    def _need_shape(self):
        if self.n is None:
            raise UsageError('%s needs --n' % self.command)
        if self.k is None and self.a is None:
            raise UsageError('%s needs --k' % self.command)
        if self.k is not None and self.a is not None and len(
                self.a) != self.k:
            raise UsageError('--a has %d coordinates but --k is %d' %
                             (len(self.a), self.k))
        try:
            shape = self.shape
            if self.a is not None:
                shape.validate(self.a)
        except (InvalidShapeError, ShapeMismatchError,
                InvalidPointError) as e:
            raise UsageError(str(e))
        return shape

    def _need_budget(self, shape):
        if shape.size > EXHAUSTIVE_BUDGET and not self.budget_override:
            raise UsageError(
                '--all-a on %s enumerates %d points, more than the budget of '
                '%d; pass --budget-override to force' %
                (shape, shape.size, EXHAUSTIVE_BUDGET))

    def validate(self):
        """Checks the rules that cut across flags; raises UsageError."""
        if self.command not in COMMANDS:
            raise UsageError('unknown command %r' % self.command)
        if self.workers < 1:
            raise UsageError('--workers must be at least 1')
        for name in self.solvers:
            if name not in SOLVERS:
                raise UsageError('unknown solver %r' % name)
        sources = sum([
            self.instance is not None, self.table is not None,
            self.a is not None, self.all_a, self.trials is not None
            and self.command == 'bench'
        ])
        if self.command != 'adversary' and sources > 1:
            raise UsageError('give exactly one instance source')
        getattr(self, '_validate_' + self.command)()
        return self

    def _validate_solve(self):
        if len(self.solvers) != 1:
            raise UsageError('solve needs exactly one --algo')
        if self.mode == 'file':
            return
        if self.mode != 'explicit':
            raise UsageError('solve needs --a, --instance or --table')
        self._need_shape()

    def _validate_bench(self):
        if not self.solvers:
            raise UsageError('bench needs at least one --algo')
        if self.mode not in ('explicit', 'exhaustive', 'sampled'):
            raise UsageError('bench needs --a, --all-a or --trials with '
                             '--seed')
        shape = self._need_shape()
        if self.mode == 'sampled':
            if self.seed is None:
                raise UsageError('sampled runs need --seed')
            if self.trials < 1:
                raise UsageError('--trials must be at least 1')
        if self.mode == 'exhaustive':
            self._need_budget(shape)

    def _validate_adversary(self):
        if self.n is not None and self.n != 2:
            raise UsageError('adversary tracking is hypercube-specific; '
                             'use --n 2')
        if self.k is None and self.a is None:
            raise UsageError('adversary needs --k')
        if self.k is not None and self.k < 1:
            raise UsageError('--k must be at least 1')
        if self.a is not None:
            self._need_hypercube_point()
        if self.trials is None or self.trials < 1:
            raise UsageError('--trials must be at least 1')
        randomised = self.a is None or self.strategy == 'uniform-random'
        if randomised and self.seed is None:
            raise UsageError('randomised adversary runs need --seed')

    def _need_hypercube_point(self):
        k = self.k if self.k is not None else len(self.a)
        if len(self.a) != k:
            raise UsageError('--a has %d coordinates but --k is %d' %
                             (len(self.a), k))
        try:
            GridShape(2, k).validate(self.a)
        except InvalidPointError as e:
            raise UsageError(str(e))

    def _validate_verify(self):
        if self.mode == 'file':
            if self.family:
                raise UsageError('--family takes --a or --all-a, not a file')
            return
        if not self.family:
            raise UsageError('verify needs --family, --table or --instance')
        if self.mode not in ('explicit', 'exhaustive'):
            raise UsageError('verify --family needs --a or --all-a')
        shape = self._need_shape()
        if self.mode == 'exhaustive':
            self._need_budget(shape)


def _solver_kwargs(name, config):
    kwargs = {}
    if name in ('dnc', 'family') and config.confirm is not None:
        kwargs['confirm'] = config.confirm
    if name == 'family' and config.prefix_inference:
        kwargs['prefix_inference'] = True
    return kwargs


def _load(config):
    inst = load_instance(config.instance or config.table)
    if config.table is not None and inst.kind != 'table':
        raise UsageError('%s holds a %s instance, not a table' %
                         (config.table, inst.kind))
    for name, value in (('n', config.n), ('k', config.k)):
        if value is not None and getattr(inst.shape, name) != value:
            raise UsageError('--%s %d does not match the instance (%s)' %
                             (name, value, inst.shape))
    return inst


def _write_json(path, doc):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(doc, f, separators=(',', ':'), sort_keys=True)
        f.write('\n')


def cmd_solve(config, out=None):
    """Solves one instance and prints the point and the query count."""
    out = out or sys.stdout
    if config.mode == 'file':
        inst = _load(config)
    else:
        inst = HiddenPointInstance(config.shape, config.a)
    name = config.solvers[0]
    outcome = SOLVERS[name](inst,
                            inst.shape,
                            record_trace=config.trace,
                            **_solver_kwargs(name, config))
    print('point: %s' % format_point(outcome.point), file=out)
    print('queries: %d' % outcome.queries, file=out)
    if config.trace:
        print('trace:', file=out)
        for t, (v, r) in enumerate(outcome.trace):
            print('  %d: %s -> %s' % (t + 1, format_point(v),
                                     format_point(r)),
                  file=out)
    # uncounted
    fixed = inst.evaluate(outcome.point) == outcome.point
    if config.out:
        _write_json(
            config.out,
            dict(solver=name,
                 point=list(outcome.point),
                 queries=outcome.queries,
                 fixed=fixed,
                 fell_back=outcome.fell_back,
                 trace=[[list(v), list(r)] for v, r in outcome.trace or []]))
    if not fixed:
        print('error: %s is not a fixed point' % format_point(outcome.point),
              file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def _bench_instances(config):
    shape = config.shape
    if config.mode == 'explicit':
        return [(format_point(config.a), config.a)]
    return family_instances(shape,
                            config.mode,
                            trials=config.trials,
                            seed=config.seed,
                            override=config.budget_override)


def cmd_bench(config, out=None):
    """Runs every solver on every instance and writes one record per run
    followed by a summary row per solver."""
    out = out or sys.stdout
    shape = config.shape
    instances = _bench_instances(config)
    rows, summaries, failed = [], [], 0
    for name in config.solvers:
        args = [(name, shape, i, a, _solver_kwargs(name, config))
                for i, a in instances]
        records = map_trials(run_trial,
                             args,
                             workers=config.workers,
                             progress=config.progress,
                             desc=name)
        queries = [r.queries for r in records]
        wall = 0
        for r in records:
            wall_ns = r.wall_ns if config.timing else 0
            wall += wall_ns
            rows.append((name, shape.n, shape.k, r.instance, r.queries,
                         str(r.correct).lower(), wall_ns))
        bad = sum(not r.correct for r in records)
        failed += bad
        mean = sum(queries) / len(queries)
        rows.append((name, shape.n, shape.k, 'summary;max=%d' % max(queries),
                     '%.4f' % mean, str(bad == 0).lower(), wall))
        summaries.append('%s: mean %.4f, max %d queries over %d instances, '
                         '%d failures' %
                         (name, mean, max(queries), len(records), bad))
    if config.out:
        write_csv(config.out, BENCH_HEADER, rows)
        report = out
    else:
        write_csv(out, BENCH_HEADER, rows)
        report = sys.stderr
    for line in summaries:
        print(line, file=report)
    print('average-depth lower bound for %s: %.4f' %
          (shape, average_depth_lower_bound(shape.n, shape.k)),
          file=report)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_adversary(config, out=None):
    """Tracks what a strategy learns about a and reports the gains."""
    out = out or sys.stdout
    k = config.k if config.k is not None else len(config.a)
    try:
        strategy = get_strategy(config.strategy)
    except InstanceFormatError:
        raise
    except (ValueError, OSError) as e:
        raise UsageError(str(e))
    stats = simulate_info_gain(strategy,
                               k,
                               config.trials,
                               config.seed or 0,
                               a=config.a,
                               workers=config.workers,
                               progress=config.progress)
    if config.out:
        stats.save(config.out)
    print(stats.summary(), file=out)
    if stats.n_trials() == 1:
        print('gains: %s' % ','.join(str(g) for g in stats.gains), file=out)
    return EXIT_OK


def _family_checks(args):
    shape, a, override = args
    results, _, _, _ = _verify_one(HiddenPointInstance(shape, a), override)
    return results


def _verify_one(inst, override):
    """Runs the brute-force checks on one instance; returns (results,
    report, fixed points, document) where results maps check name to
    pass/fail."""
    report = check_monotone(inst, override=override)
    P = fixed_points_bruteforce(inst, override=override)
    results = {
        'monotone': report.monotone,
        'tarski lattice': check_tarski_lattice(P),
    }
    if isinstance(inst, HiddenPointInstance):
        results['unique fixed point at a'] = P == {inst.a}
    elif isinstance(inst, ClampLiftOracle):
        inner = fixed_points_bruteforce(inst.inner, override=override)
        results['same fixed points as inner'] = P == inner
    doc = report.to_dict()
    doc['fixed_points'] = [list(p) for p in sorted(P)]
    doc['checks'] = results
    return results, report, P, doc


def cmd_verify(config, out=None):
    """Brute-force checks: monotonicity, fixed points, lattice structure and
    (for the family) uniqueness of the fixed point."""
    out = out or sys.stdout
    if config.mode == 'exhaustive':
        shape = config.shape
        args = [(shape, a, config.budget_override)
                for a in iterate_points(shape, override=config.budget_override)]
        results = map_trials(_family_checks,
                             args,
                             workers=config.workers,
                             progress=config.progress,
                             desc='verify')
        failures = {}
        for (_, a, _), checks in zip(args, results):
            failed = [name for name, ok in checks.items() if not ok]
            if failed:
                failures[format_point(a)] = failed
        passed = {name: sum(checks[name] for checks in results)
                  for name in results[0]}
        for name, count in passed.items():
            print('%s: %s (%d of %d)' %
                  (name, 'PASS' if count == len(args) else 'FAIL', count,
                   len(args)),
                  file=out)
        for a, failed in failures.items():
            print('FAIL a=%s: %s' % (a, ', '.join(failed)), file=out)
        if failures:
            print('%d of %d instances failed' % (len(failures), len(args)),
                  file=out)
        else:
            print('%d instances, all pass' % len(args), file=out)
        if config.out:
            _write_json(config.out,
                        dict(instances=len(args),
                             passed=passed,
                             failures=failures))
        return EXIT_FAILED if failures else EXIT_OK

    if config.mode == 'file':
        inst = _load(config)
    else:
        inst = HiddenPointInstance(config.shape, config.a)
    results, report, P, doc = _verify_one(inst, config.budget_override)
    for name, ok in results.items():
        line = '%s: %s' % (name, 'PASS' if ok else 'FAIL')
        if name == 'monotone' and not ok:
            line += ' (%s)' % report
        print(line, file=out)
    print('fixed points: {%s}' % ' '.join('(%s)' % format_point(p)
                                          for p in sorted(P)),
          file=out)
    if config.out:
        _write_json(config.out, doc)
    return EXIT_OK if all(results.values()) else EXIT_FAILED


def _add_shape_arguments(parser):
    parser.add_argument('--n', type=int, help='Points per coordinate.')
    parser.add_argument('--k', type=int, help='Number of coordinates.')
    parser.add_argument('--a',
                        help='Hidden point, comma separated (e.g. 2,4).')
    parser.add_argument('--budget-override',
                        action='store_true',
                        help='Allow exhaustive work past the budget.')


def _add_solver_arguments(parser, many=False):
    parser.add_argument('--algo',
                        action='append',
                        choices=sorted(SOLVERS),
                        required=not many,
                        help='Solver%s to run.' %
                        (' (repeat for several)' if many else ''))
    parser.add_argument('--confirm',
                        action=argparse.BooleanOptionalAction,
                        default=None,
                        help='Let dnc and family confirm their answer.')
    parser.add_argument('--prefix-inference',
                        action='store_true',
                        help='Tighter bounds in the family solver.')


def _add_runtime_arguments(parser):
    parser.add_argument('--workers',
                        type=int,
                        default=1,
                        help='Worker processes for independent trials.')
    parser.add_argument('--no-progress',
                        action='store_true',
                        help='Never show a progress bar.')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='tarski-search',
        description='Query-counting fixed point search on L_n^k.')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true')
    verbosity.add_argument('-q', '--quiet', action='store_true')
    sub = parser.add_subparsers(dest='command', required=True)

    solve = sub.add_parser('solve', help='Find a fixed point of one '
                           'instance.')
    _add_shape_arguments(solve)
    _add_solver_arguments(solve)
    solve.add_argument('--instance', help='Instance JSON file.')
    solve.add_argument('--table', help='Table instance JSON file.')
    solve.add_argument('--trace', action='store_true',
                       help='Print every query and response.')
    solve.add_argument('--out', help='Write the outcome as JSON.')

    bench = sub.add_parser('bench', help='Query counts over many hidden '
                           'points.')
    _add_shape_arguments(bench)
    _add_solver_arguments(bench, many=True)
    bench.add_argument('--all-a', action='store_true',
                       help='Every hidden point of the grid.')
    bench.add_argument('--trials', type=int,
                       help='Uniformly sampled hidden points.')
    bench.add_argument('--seed', type=int)
    bench.add_argument('--out', help='CSV output (default stdout).')
    bench.add_argument('--no-timing', action='store_true',
                       help='Write wall_ns as 0.')
    _add_runtime_arguments(bench)

    adversary = sub.add_parser('adversary', help='Information gain of a '
                               'query strategy on the hypercube.')
    _add_shape_arguments(adversary)
    adversary.add_argument('--strategy', default='uniform-random',
                           help='uniform-random, all-zeros-then-flip, '
                           'path-follow or replay:<file>.')
    adversary.add_argument('--trials', type=int, default=1)
    adversary.add_argument('--seed', type=int)
    adversary.add_argument('--out', help='Per-step gains as CSV.')
    _add_runtime_arguments(adversary)

    verify = sub.add_parser('verify', help='Brute-force checks.')
    _add_shape_arguments(verify)
    verify.add_argument('--family', action='store_true',
                        help='Check hidden-point instances.')
    verify.add_argument('--all-a', action='store_true')
    verify.add_argument('--instance', help='Instance JSON file.')
    verify.add_argument('--table', help='Table instance JSON file.')
    verify.add_argument('--out', help='Write the report as JSON.')
    _add_runtime_arguments(verify)
    return parser


def setup_logging(verbose=False, quiet=False):
    level = logging.DEBUG if verbose else (
        logging.ERROR if quiet else logging.WARNING)
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')
    logging.captureWarnings(True)


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose, args.quiet)
    args.progress = (not getattr(args, 'no_progress', True)
                     and sys.stderr.isatty())
    commands = dict(solve=cmd_solve,
                    bench=cmd_bench,
                    adversary=cmd_adversary,
                    verify=cmd_verify)
    try:
        config = ExperimentConfig.from_args(args).validate()
        logger.debug('running %s with %s', config.command, config)
        return commands[config.command](config, out=out)
    except (UsageError, BudgetExceededError, InstanceFormatError,
            InvalidPointError, InvalidShapeError, ShapeMismatchError,
            OSError) as e:
        print('error: %s' % e, file=sys.stderr)
        return EXIT_USAGE
    except (NotMonotoneError, NotFamilyResponseError,
            InconsistentHistoryError) as e:
        print('error: %s' % e, file=sys.stderr)
        return EXIT_FAILED
