import json
import math

import numpy as np
import pytest

from resolventlab.configs.base_config import get_cfg_defaults
from resolventlab.utils import logging as rl_logging
from resolventlab.utils.config import (apply_overrides, merge_cfg_file, parse_scenario_file, resolve_spec_path,
                                       validate_scenario)
from resolventlab.utils.errors import (ArgumentError, ContourError, DomainError, NoSolutionError, NumericalError,
                                       ResolutionError, ResolventLabError, SchemaError, SingularityError,
                                       TrajectoryTruncated, UndefinedDerivativeError, UnsupportedError)
from resolventlab.utils.output import format_value, write_csv, write_json
from resolventlab.utils.parallel import map_points


def write_yaml(tmp_path, text, name='scenario.yaml'):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


# errors

def test_error_hierarchy():
    assert issubclass(DomainError, ValueError) and issubclass(DomainError, ResolventLabError)
    assert issubclass(SchemaError, ArgumentError) and issubclass(UndefinedDerivativeError, ArgumentError)
    for cls in (NoSolutionError, SingularityError, ContourError, ResolutionError, TrajectoryTruncated):
        assert issubclass(cls, NumericalError)
    assert issubclass(NumericalError, ArithmeticError)
    assert issubclass(UnsupportedError, NotImplementedError)


def test_error_payloads():
    err = NoSolutionError(0.5, 1.0, witness=0.9j, detail='step 1e-11')
    assert (err.last_good_t, err.t_target, err.witness) == (0.5, 1.0, 0.9j)
    assert str(err).startswith('boundary collapse at t=0.5')
    assert 'step 1e-11' in str(err)
    truncated = TrajectoryTruncated(2, 1j, 3)
    assert (truncated.s_reached, truncated.value, truncated.t_target) == (2.0, 1j, 3.0)
    assert SchemaError('bad').pointer == '/'
    assert '(at /a/b)' in str(SchemaError('bad', '/a/b'))


# logging

@pytest.mark.parametrize('value, level', [(None, 1), ('error', 0), ('INFO', 1), (' debug ', 2)])
def test_log_level(monkeypatch, value, level):
    if value is None:
        monkeypatch.delenv(rl_logging.LOG_ENV, raising=False)
    else:
        monkeypatch.setenv(rl_logging.LOG_ENV, value)
    assert rl_logging.log_level() == level


def test_log_level_rejects_unknown(monkeypatch):
    monkeypatch.setenv(rl_logging.LOG_ENV, 'verbose')
    with pytest.raises(ArgumentError):
        rl_logging.log_level()


def test_messages_follow_level(monkeypatch, capsys):
    monkeypatch.setenv(rl_logging.LOG_ENV, 'error')
    rl_logging.log_info('hidden info')
    rl_logging.log_debug('hidden debug')
    rl_logging.log_error('shown error')
    out = capsys.readouterr().out
    assert 'shown error' in out and 'hidden' not in out
    assert rl_logging.progress_disabled('info')

    monkeypatch.setenv(rl_logging.LOG_ENV, 'debug')
    rl_logging.log_debug('shown debug')
    assert 'shown debug' in capsys.readouterr().out
    assert not rl_logging.progress_disabled()


def test_timing_keeps_result(quiet_log):
    @rl_logging.timing
    def add(a, b=1):
        return a + b
    assert add(2, b=3) == 5
    assert add.__name__ == 'add'


# output

@pytest.mark.parametrize('value, text', [
    (True, '1'),
    (np.bool_(False), '0'),
    (3, '3'),
    (np.int64(-7), '-7'),
    (0.1, '0.10000000000000001'),
    (np.float64(2.5), '2.5'),
    (float('nan'), 'nan'),
    (-math.inf, '-inf'),
    ('label', 'label'),
])
def test_format_value(value, text):
    assert format_value(value) == text


def test_format_value_digits():
    assert format_value(math.pi, digits=3) == '3.14'


def test_write_csv(tmp_path):
    path = write_csv(str(tmp_path / 'sub' / 'rows.csv'), ('t', 'x', 'ok'), [(0.5, 1e-20, True), (1, -2.0, False)])
    assert open(path).read() == 't,x,ok\n0.5,9.9999999999999995e-21,1\n1,-2,0\n'


def test_write_json(tmp_path):
    data = {'z': 1 + 2j, 'arr': np.array([1j, 2.0]), 'n': np.int64(4), 'flag': np.bool_(True),
            'bad': float('inf'), 'nested': [(0.5, np.float32(0.25))], 3: 'key'}
    path = write_json(str(tmp_path / 'out.json'), data)
    with open(path) as f:
        loaded = json.load(f)
    assert loaded == {'z': [1.0, 2.0], 'arr': [[0.0, 1.0], [2.0, 0.0]], 'n': 4, 'flag': True, 'bad': 'inf',
                      'nested': [[0.5, 0.25]], '3': 'key'}


# parallel

def test_map_points_keeps_order(quiet_log):
    items = [3 - 4j, 1j, -2.0, 0.0]
    assert map_points(abs, items) == [5.0, 1.0, 2.0, 0.0]
    assert map_points(abs, items, jobs=2) == [5.0, 1.0, 2.0, 0.0]
    assert map_points(abs, [], jobs=4) == []


# configuration

def test_defaults():
    config = get_cfg_defaults()
    assert config.solver.tol == 1e-12
    assert config.arch.jobs == 1
    assert list(config.freeprob.stieltjes_eps) == [1e-1, 1e-2, 1e-3]
    assert config is not get_cfg_defaults()


def test_parse_scenario_file(tmp_path):
    path = write_yaml(tmp_path, 'scenario:\n  command: resolvent\n  spec: g.json\n  t_grid: [0.5, 1.0]\n'
                                'solver:\n  tol: 1.0e-13\n')
    config = parse_scenario_file(path)
    assert config.scenario.command == 'resolvent'
    assert config.solver.tol == 1e-13
    assert config.config == path
    assert resolve_spec_path(config) == str(tmp_path / 'g.json')
    config.scenario.spec = '/abs/g.json'
    assert resolve_spec_path(config) == '/abs/g.json'
    config.scenario.spec = ''
    assert resolve_spec_path(config) is None


@pytest.mark.parametrize('text, pointer', [
    ('scenario:\n  colour: red\n', '/scenario/colour'),
    ('solver:\n  tol: 1\n', '/solver/tol'),
    ('arch:\n  seed: abc\n', '/arch/seed'),
])
def test_scenario_schema_errors(tmp_path, text, pointer):
    with pytest.raises(SchemaError) as info:
        parse_scenario_file(write_yaml(tmp_path, text))
    assert info.value.pointer == pointer


def test_scenario_file_errors(tmp_path):
    with pytest.raises(SchemaError):
        parse_scenario_file(str(tmp_path / 'missing.yaml'))
    with pytest.raises(SchemaError):
        parse_scenario_file(str(tmp_path / 'scenario.json'))


def test_merge_without_file():
    config = get_cfg_defaults()
    assert merge_cfg_file(config) is config


def test_apply_overrides():
    config = apply_overrides(get_cfg_defaults(), tol=1e-9, seed=7, jobs=3, out='/tmp/run')
    assert (config.solver.tol, config.arch.seed, config.arch.jobs, config.output.path) == (1e-9, 7, 3, '/tmp/run')
    untouched = apply_overrides(get_cfg_defaults())
    assert untouched.arch.seed == 42


@pytest.mark.parametrize('key, value, pointer', [
    ('solver.tol', 0.0, '/solver/tol'),
    ('arch.jobs', 0, '/arch/jobs'),
    ('scenario.t_grid', [1.0, 0.5], '/scenario/t_grid'),
    ('scenario.t_grid', [-1.0], '/scenario/t_grid'),
    ('scenario.points', [[0.1, 0.2], [0.3]], '/scenario/points/1'),
    ('scenario.x_grid', [0.0, 1.0, 1], '/scenario/x_grid'),
])
def test_validate_scenario(key, value, pointer):
    config = get_cfg_defaults()
    config.merge_from_list([key, value])
    with pytest.raises(SchemaError) as info:
        validate_scenario(config)
    assert info.value.pointer == pointer
