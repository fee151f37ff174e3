import csv
import io
import json

import pytest

from tarski_search.cli import (BENCH_HEADER, ExperimentConfig, UsageError,
                               build_parser, main)
from tarski_search.lattice import GridShape
from tarski_search.oracles import (HiddenPointInstance, TableInstance,
                                   dump_instance, lift_clamp)


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def read_csv(path):
    with open(path, newline='') as f:
        return list(csv.reader(f))


@pytest.fixture
def swap_file(tmp_path):
    path = str(tmp_path / 'swap.json')
    dump_instance(TableInstance.from_rows(GridShape(2, 1), [[0, 1], [1, 0]]),
                  path)
    return path


def test_solve_kleene(capsys):
    status, out, _ = run(capsys, 'solve', '--algo', 'kleene', '--n', '7',
                         '--k', '2', '--a', '2,4')
    assert status == 0
    assert out.splitlines() == ['point: 2,4', 'queries: 7']


def test_solve_family(capsys):
    status, out, _ = run(capsys, 'solve', '--algo', 'family', '--n', '2',
                         '--k', '3', '--a', '1,0,1')
    assert status == 0
    assert out.splitlines() == ['point: 1,0,1', 'queries: 2']


def test_solve_dnc(capsys):
    status, out, _ = run(capsys, 'solve', '--algo', 'dnc', '--n', '7', '--k',
                         '1', '--a', '2')
    lines = out.splitlines()
    assert status == 0
    assert lines[0] == 'point: 2'
    assert int(lines[1].split(': ')[1]) <= 4


def test_solve_trace_and_json(capsys, tmp_path):
    path = str(tmp_path / 'outcome.json')
    status, out, _ = run(capsys, 'solve', '--algo', 'kleene-top', '--n', '3',
                         '--k', '2', '--a', '1,2', '--trace', '--out', path)
    assert status == 0
    assert out.splitlines()[2:] == ['trace:', '  1: 2,2 -> 1,2',
                                    '  2: 1,2 -> 1,2']
    with open(path) as f:
        doc = json.load(f)
    assert doc['point'] == [1, 2] and doc['queries'] == 2 and doc['fixed']


def test_solve_instance_file(capsys, tmp_path):
    path = str(tmp_path / 'lift.json')
    dump_instance(lift_clamp(HiddenPointInstance(GridShape(2, 2), (1, 0)), 4),
                  path)
    status, out, _ = run(capsys, 'solve', '--algo', 'dnc', '--instance', path)
    assert status == 0
    assert out.splitlines()[0] == 'point: 1,0'


def test_solve_bad_instance_file(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{"kind": "hidden-point",\n "n": 7,\n "k": 2,\n "a": [2, 9]}')
    status, _, err = run(capsys, 'solve', '--algo', 'kleene', '--instance',
                         str(path))
    assert status == 2
    assert "field 'a'" in err
    path.write_text('{"kind": "hidden-point",\n "n": 7,\n ]')
    status, _, err = run(capsys, 'solve', '--algo', 'kleene', '--instance',
                         str(path))
    assert status == 2
    assert 'line 3' in err


def test_solve_non_monotone_table_fails(capsys, swap_file):
    status, _, err = run(capsys, 'solve', '--algo', 'kleene', '--table',
                         swap_file)
    assert status == 1
    assert 'not monotone' in err


def test_solve_usage_errors(capsys):
    assert run(capsys, 'solve', '--algo', 'kleene', '--n', '7')[0] == 2
    assert run(capsys, 'solve', '--algo', 'kleene', '--n', '7', '--k', '2',
               '--a', '2,4,1')[0] == 2
    assert run(capsys, 'solve', '--algo', 'kleene', '--n', '7', '--a',
               '2,9')[0] == 2
    assert run(capsys, 'solve', '--algo', 'kleene', '--n', '7', '--a',
               'x')[0] == 2


def test_bench_exhaustive(capsys, tmp_path):
    path = str(tmp_path / 'bench.csv')
    status, out, _ = run(capsys, 'bench', '--algo', 'kleene', '--algo',
                         'family', '--n', '2', '--k', '2', '--all-a', '--out',
                         path, '--no-timing')
    assert status == 0
    rows = read_csv(path)
    assert tuple(rows[0]) == BENCH_HEADER
    assert len(rows) == 1 + 8 + 2
    kleene = [r for r in rows[1:] if r[0] == 'kleene']
    assert [r[3] for r in kleene[:4]] == ['0,0', '0,1', '1,0', '1,1']
    assert [int(r[4]) for r in kleene[:4]] == [1, 2, 2, 3]
    assert kleene[4][3] == 'summary;max=3'
    assert float(kleene[4][4]) == 2.0
    assert all(r[5] == 'true' and r[6] == '0' for r in rows[1:])
    assert 'lower bound' in out


def test_bench_is_deterministic(capsys, tmp_path):
    outputs = []
    for i, workers in enumerate(['1', '2']):
        path = str(tmp_path / ('bench%d.csv' % i))
        status, _, _ = run(capsys, 'bench', '--algo', 'dnc', '--algo',
                           'family', '--n', '16', '--k', '3', '--trials',
                           '30', '--seed', '4', '--out', path, '--no-timing',
                           '--workers', workers)
        assert status == 0
        with open(path, 'rb') as f:
            outputs.append(f.read())
    assert outputs[0] == outputs[1]
    assert b'4+29' in outputs[0]


def test_bench_sampled_family_bound(capsys, tmp_path):
    path = str(tmp_path / 'bench.csv')
    status, _, _ = run(capsys, 'bench', '--algo', 'family', '--n', '64',
                       '--k', '64', '--trials', '1000', '--seed', '7',
                       '--out', path)
    assert status == 0
    rows = read_csv(path)[1:]
    assert len(rows) == 1001
    assert all(int(r[4]) <= 128 for r in rows[:-1])
    assert rows[0][3] == '7+0'


def test_bench_to_stdout(capsys):
    status, out, err = run(capsys, 'bench', '--algo', 'kleene', '--n', '3',
                           '--k', '1', '--a', '2', '--no-timing')
    assert status == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1] == ['kleene', '3', '1', '2', '3', 'true', '0']
    assert 'mean' in err


def test_bench_usage_errors(capsys):
    assert run(capsys, 'bench', '--n', '2', '--k', '2', '--all-a')[0] == 2
    assert run(capsys, 'bench', '--algo', 'dnc', '--n', '2', '--k', '2',
               '--trials', '5')[0] == 2
    assert run(capsys, 'bench', '--algo', 'dnc', '--n', '2', '--k', '2')[0] \
        == 2
    assert run(capsys, 'bench', '--algo', 'dnc', '--n', '2', '--k', '30',
               '--all-a')[0] == 2


def test_adversary_replay(capsys, tmp_path):
    replay = tmp_path / 'seven_bit_trace.json'
    replay.write_text(
        json.dumps([[0, 1, 1, 1, 0, 0, 1], [0, 0, 1, 0, 1, 0, 1],
                    [0, 0, 1, 1, 1, 0, 0]]))
    path = str(tmp_path / 'gains.csv')
    status, out, _ = run(capsys, 'adversary', '--k', '7', '--a',
                         '0,0,1,1,1,1,0', '--strategy', 'replay:%s' % replay,
                         '--out', path)
    assert status == 0
    assert 'gains: 3,3,1' in out.splitlines()
    assert read_csv(path) == [['trial', 'step', 'gain', 'delta0', 'delta1'],
                              ['1', '1', '3', '2', '1'],
                              ['1', '2', '3', '1', '2'],
                              ['1', '3', '1', '1', '0']]


def test_adversary_uniform(capsys):
    status, out, _ = run(capsys, 'adversary', '--k', '32', '--strategy',
                         'uniform-random', '--trials', '1000', '--seed', '1')
    assert status == 0
    line = [l for l in out.splitlines() if l.startswith('mean gain')][0]
    assert float(line.split()[2]) <= 4


def test_adversary_usage_errors(capsys):
    assert run(capsys, 'adversary', '--n', '3', '--k', '4', '--trials', '5',
               '--seed', '1')[0] == 2
    assert run(capsys, 'adversary', '--k', '4', '--trials', '0', '--seed',
               '1')[0] == 2
    assert run(capsys, 'adversary', '--k', '4', '--trials', '5')[0] == 2
    assert run(capsys, 'adversary', '--k', '4', '--strategy', 'greedy',
               '--seed', '1')[0] == 2


def test_verify_family_sweep(capsys, tmp_path):
    path = str(tmp_path / 'sweep.json')
    status, out, _ = run(capsys, 'verify', '--family', '--n', '5', '--k', '3',
                         '--all-a', '--out', path)
    assert status == 0
    assert out.splitlines() == [
        'monotone: PASS (125 of 125)', 'tarski lattice: PASS (125 of 125)',
        'unique fixed point at a: PASS (125 of 125)',
        '125 instances, all pass'
    ]
    with open(path) as f:
        doc = json.load(f)
    assert doc['instances'] == 125 and doc['failures'] == {}
    assert doc['passed']['tarski lattice'] == 125


def test_empty_grid_is_a_usage_error(capsys):
    for argv in [
        ('solve', '--algo', 'kleene', '--n', '0', '--k', '2', '--a', '0,0'),
        ('bench', '--algo', 'kleene', '--n', '3', '--k', '0', '--all-a'),
        ('bench', '--algo', 'kleene', '--n', '0', '--k', '2', '--trials', '3',
         '--seed', '1'),
        ('adversary', '--k', '0', '--seed', '1'),
        ('verify', '--family', '--n', '2', '--k', '0', '--all-a'),
    ]:
        status, _, err = run(capsys, *argv)
        assert status == 2
        assert 'error:' in err


def test_undecodable_files_are_usage_errors(capsys, tmp_path):
    path = tmp_path / 'latin1.json'
    path.write_bytes(b'\xff\xfe{"kind": "table"}')
    status, _, err = run(capsys, 'solve', '--algo', 'kleene', '--instance',
                         str(path))
    assert status == 2
    assert 'UTF-8' in err
    status, _, err = run(capsys, 'adversary', '--k', '3', '--a', '0,1,0',
                         '--strategy', 'replay:%s' % path)
    assert status == 2
    assert 'UTF-8' in err


def test_verify_hidden_24(capsys, tmp_path):
    path = str(tmp_path / 'report.json')
    status, out, _ = run(capsys, 'verify', '--family', '--n', '7', '--k', '2',
                         '--a', '2,4', '--out', path)
    assert status == 0
    assert out.splitlines() == [
        'monotone: PASS', 'tarski lattice: PASS',
        'unique fixed point at a: PASS', 'fixed points: {(2,4)}'
    ]
    with open(path) as f:
        doc = json.load(f)
    assert doc['monotone'] and doc['fixed_points'] == [[2, 4]]


def test_verify_swap_table(capsys, swap_file, tmp_path):
    path = str(tmp_path / 'report.json')
    status, out, _ = run(capsys, 'verify', '--table', swap_file, '--out', path)
    assert status == 1
    assert out.splitlines()[0].startswith('monotone: FAIL')
    with open(path) as f:
        doc = json.load(f)
    assert doc['witness'] == dict(u=[0], v=[1])


def test_verify_clamp_lift_file(capsys, tmp_path):
    path = str(tmp_path / 'lift.json')
    dump_instance(lift_clamp(HiddenPointInstance(GridShape(2, 3), (1, 0, 1)),
                             3), path)
    status, out, _ = run(capsys, 'verify', '--instance', path)
    assert status == 0
    assert 'same fixed points as inner: PASS' in out.splitlines()


def test_verify_usage_errors(capsys, swap_file):
    assert run(capsys, 'verify', '--n', '5', '--k', '3', '--all-a')[0] == 2
    assert run(capsys, 'verify', '--family', '--n', '5', '--k', '3')[0] == 2
    assert run(capsys, 'verify', '--family', '--table', swap_file)[0] == 2
    assert run(capsys, 'verify', '--family', '--n', '2', '--k', '30',
               '--all-a')[0] == 2


def test_config_validation():
    parser = build_parser()
    args = parser.parse_args(['bench', '--algo', 'kleene', '--n', '2', '--k',
                              '2', '--trials', '3'])
    args.progress = False
    config = ExperimentConfig.from_args(args)
    assert config.mode == 'sampled'
    with pytest.raises(UsageError):
        config.validate()
    config = ExperimentConfig('bench', n=2, k=2, solvers=('kleene', ),
                              trials=3, seed=0)
    assert config.validate() is config
    assert config.shape == GridShape(2, 2)
    with pytest.raises(UsageError):
        ExperimentConfig('bench', n=2, k=2, solvers=('kleene', ), trials=3,
                         seed=0, workers=0).validate()
    with pytest.raises(UsageError):
        ExperimentConfig('plot').validate()
