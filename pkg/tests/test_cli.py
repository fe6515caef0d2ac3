import csv
import glob
import json
import os

import pytest

import resolventlab
from resolventlab.utils.config import parse_scenario_file, validate_scenario
from resolventlab.utils.scenario_utils import EXIT_INPUT, EXIT_OK, EXIT_VERIFY, parse_args, run_scenario

CONFIG_DIR = os.path.join(os.path.dirname(resolventlab.__file__), 'configs')
SPEC_DIR = os.path.join(CONFIG_DIR, 'specs')


@pytest.fixture(autouse=True)
def quiet(quiet_log):
    pass


def scenario(tmp_path, text, name='scenario.yaml'):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def read_json(path):
    with open(path) as f:
        return json.load(f)


def read_csv(path):
    with open(path, newline='') as f:
        return list(csv.reader(f))


@pytest.mark.parametrize('path', sorted(glob.glob(os.path.join(CONFIG_DIR, '*.yaml'))))
def test_bundled_scenarios_validate(path):
    config = validate_scenario(parse_scenario_file(path))
    assert config.scenario.command in ('resolvent', 'chain', 'semigroup', 'freeconv', 'verify', 'figure')
    if config.scenario.spec:
        assert os.path.isfile(os.path.join(CONFIG_DIR, config.scenario.spec))


def test_parse_args():
    args = parse_args(['--scenario', 'a.yaml', '--tol', '1e-9', '--jobs', '2'])
    assert (args.scenario, args.tol, args.jobs, args.seed, args.out) == ('a.yaml', 1e-9, 2, None, None)
    with pytest.raises(SystemExit):
        parse_args([])


def test_resolvent_command(tmp_path):
    path = scenario(tmp_path, 'scenario:\n  command: resolvent\n  spec: {}\n  t_grid: [0.5, 1.0]\n'
                              '  points: [[0.1, 0.2], [-0.3, 0.0]]\n'
                              .format(os.path.join(SPEC_DIR, 'disk_hyperbolic_g1.json')))
    out = tmp_path / 'out'
    assert run_scenario(path, out=str(out)) == EXIT_OK
    records = read_json(out / 'resolvent.json')
    assert len(records) == 4
    at_one = [r for r in records if r['t'] == 1.0]
    for record in at_one:
        w = complex(*record['w'])
        assert complex(*record['z']) == pytest.approx(w / (w + 2.0), abs=1e-10)
    summary = read_json(out / 'summary.json')
    assert summary['exit_code'] == 0
    assert summary['name'] == 'scenario'
    assert summary['window']['t_max'] is not None
    assert 'resolvent.json' in summary['artifacts']


def test_resolvent_collapse_exits_one(tmp_path):
    (tmp_path / 'z.json').write_text('{"generator": {"kind": "catalog", "name": "halfplane_z"}}')
    path = scenario(tmp_path, 'scenario:\n  command: resolvent\n  spec: z.json\n  t_grid: [0.5, 1.5]\n'
                              '  points: [[0.2, 0.3]]\n')
    out = tmp_path / 'out'
    assert run_scenario(path, out=str(out)) == EXIT_VERIFY
    report = read_json(out / 'report.json')
    assert not report['passed']
    assert report['violation']['error'] == 'NoSolutionError'
    assert report['violation']['t_target'] == 1.5
    assert report['violation']['last_good_t'] < 1.0
    assert len(read_json(out / 'resolvent.json')) == 1


def test_verify_command(tmp_path):
    path = scenario(tmp_path, 'scenario:\n  command: verify\n  check: halfplane_window\n')
    out = tmp_path / 'out'
    assert run_scenario(path, out=str(out), tol=1e-12, seed=3) == EXIT_OK
    report = read_json(out / 'report.json')
    assert report['passed'] and report['name'] == 'halfplane_window'


def test_chain_command(tmp_path):
    path = scenario(tmp_path, 'scenario:\n  command: chain\n  spec: {}\n  t_grid: [0.5, 1.5]\n'
                              '  points: [[0.3, 0.1]]\ngenerator_test:\n  grid_n: 8\n'
                              .format(os.path.join(SPEC_DIR, 'jump_field.json')))
    out = tmp_path / 'out'
    assert run_scenario(path, out=str(out)) == EXIT_OK
    rows = read_csv(out / 'chain.csv')
    assert rows[0] == ['t', 'w_re', 'w_im', 'k_re', 'k_im', 'member', 'residual']
    assert [row[0] for row in rows[1:]] == ['0.5', '1.5']
    assert 'certificate' in read_json(out / 'summary.json')


def test_semigroup_command(tmp_path):
    path = scenario(tmp_path, 'scenario:\n  command: semigroup\n  spec: {}\n  t: 0.5\n'
                              '  points: [[0.2, 0.1]]\n  n_list: [2, 4, 8]\n'
                              .format(os.path.join(SPEC_DIR, 'disk_parabolic.json')))
    out = tmp_path / 'out'
    assert run_scenario(path, out=str(out)) == EXIT_OK
    convergence = read_csv(out / 'convergence.csv')
    assert [row[2] for row in convergence[1:]] == ['2', '4', '8']
    errors = [float(row[3]) for row in convergence[1:]]
    assert errors == sorted(errors, reverse=True)
    trajectory = read_csv(out / 'trajectory.csv')
    assert float(trajectory[-1][1]) == pytest.approx(0.5)


def test_freeconv_command(tmp_path):
    path = scenario(tmp_path, 'scenario:\n  command: freeconv\n  spec: {}\n  x_grid: [-1.0, 1.0, 3]\n'
                              '  y_levels: [1.0]\n'.format(os.path.join(SPEC_DIR, 'semicircle.json')))
    out = tmp_path / 'out'
    assert run_scenario(path, out=str(out)) == EXIT_OK
    density = read_csv(out / 'density.csv')
    assert density[0] == ['x', 'density', 'flagged']
    assert float(density[2][1]) == pytest.approx(1.0 / 3.141592653589793, abs=1e-5)
    assert len(read_csv(out / 'transforms.csv')) == 4


def test_figure_command(tmp_path):
    path = scenario(tmp_path, 'scenario:\n  command: figure\n  figure: semicircle_f\n  x_grid: [-3.0, 3.0, 7]\n'
                              '  y_levels: [0.5]\n')
    out = tmp_path / 'out'
    assert run_scenario(path, out=str(out)) == EXIT_OK
    rows = read_csv(out / 'semicircle_f.csv')
    assert rows[0] == ['curve', 'x', 'y', 're', 'im']
    assert len(rows) == 1 + 3 + 7


@pytest.mark.parametrize('text', [
    'scenario:\n  command: resolvent\n  colour: red\n',
    'scenario:\n  command: teleport\n',
    'scenario:\n  command: resolvent\n  spec: missing.json\n  t_grid: [1.0]\n  points: [[0.1, 0.1]]\n',
    'scenario:\n  command: resolvent\n  spec: {}\n  t_grid: [1.0]\n'.format(
        os.path.join(SPEC_DIR, 'disk_parabolic.json')),
    'scenario:\n  command: verify\n',
    'scenario:\n  command: resolvent\n  t_grid: [1.0, 0.5]\n',
])
def test_input_errors_exit_two(tmp_path, text):
    out = tmp_path / 'out'
    assert run_scenario(scenario(tmp_path, text), out=str(out)) == EXIT_INPUT
    assert read_json(out / 'summary.json')['exit_code'] == EXIT_INPUT


def test_unknown_key_reports_pointer(tmp_path):
    out = tmp_path / 'out'
    path = scenario(tmp_path, 'scenario:\n  command: resolvent\n  colour: red\n')
    assert run_scenario(path, out=str(out)) == EXIT_INPUT
    assert read_json(out / 'summary.json')['pointer'] == '/scenario/colour'


def test_missing_scenario_exits_two(tmp_path):
    assert run_scenario(str(tmp_path / 'nope.yaml')) == EXIT_INPUT


def test_bad_log_level_exits_two(tmp_path, monkeypatch):
    monkeypatch.setenv('RESOLVENTLAB_LOG', 'loud')
    path = scenario(tmp_path, 'scenario:\n  command: verify\n  check: strip_bound\n')
    assert run_scenario(path, out=str(tmp_path / 'out')) == EXIT_INPUT
