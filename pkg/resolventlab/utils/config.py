import os

from resolventlab.configs.base_config import get_cfg_defaults
from resolventlab.utils.errors import SchemaError


def merge_cfg_file(config, cfg_file=None):
    """Merge configuration file"""
    if cfg_file is not None:
        try:
            config.merge_from_file(cfg_file)
        except KeyError as err:
            # yacs reports unknown keys as "Non-existent config key: a.b"
            key = str(err).strip('"\'').split(':')[-1].strip()
            raise SchemaError('unknown scenario key', pointer='/' + key.replace('.', '/')) from err
        except ValueError as err:
            raise SchemaError(str(err), pointer=_type_mismatch_pointer(str(err))) from err
        config.merge_from_list(['config', os.path.abspath(cfg_file)])
    return config


def _type_mismatch_pointer(message):
    # "Type mismatch (<class 'int'> vs. <class 'str'>) with values (1 vs. a) for config key: arch.seed"
    if 'config key:' in message:
        return '/' + message.rsplit('config key:', 1)[1].strip().replace('.', '/')
    return '/'


def apply_overrides(config, tol=None, seed=None, jobs=None, out=None):
    """
    Apply command line overrides on top of a parsed scenario

    Parameters
    ----------
    config : CfgNode
        Parsed scenario configuration
    tol, seed, jobs, out : optional
        Values of ``--tol``, ``--seed``, ``--jobs`` and ``--out``; ``None`` keeps the file value

    Returns
    -------
    config : CfgNode
        Updated configuration
    """
    overrides = []
    if tol is not None:
        overrides += ['solver.tol', float(tol)]
    if seed is not None:
        overrides += ['arch.seed', int(seed)]
    if jobs is not None:
        overrides += ['arch.jobs', int(jobs)]
    if out is not None:
        overrides += ['output.path', str(out)]
    if overrides:
        config.merge_from_list(overrides)
    return config


def validate_scenario(config):
    """Check grid and tolerance invariants that yacs cannot express."""
    if config.solver.tol <= 0:
        raise SchemaError('tolerance must be positive', pointer='/solver/tol')
    if config.arch.jobs < 1:
        raise SchemaError('jobs must be >= 1', pointer='/arch/jobs')
    t_grid = list(config.scenario.t_grid)
    if any(t < 0 for t in t_grid):
        raise SchemaError('times must be non-negative', pointer='/scenario/t_grid')
    if t_grid != sorted(t_grid):
        raise SchemaError('t_grid must be sorted', pointer='/scenario/t_grid')
    for i, point in enumerate(config.scenario.points):
        if len(point) != 2:
            raise SchemaError('points are [re, im] pairs', pointer='/scenario/points/{}'.format(i))
    if len(config.scenario.x_grid) != 3 or int(config.scenario.x_grid[2]) < 2:
        raise SchemaError('x_grid is [lo, hi, n] with n >= 2', pointer='/scenario/x_grid')
    return config


def parse_scenario_file(file):
    """
    Parse a scenario file

    Parameters
    ----------
    file : str
        A **.yaml** scenario file overriding the defaults of ``configs/base_config.py``

    Returns
    -------
    config : CfgNode
        Parsed scenario configuration
    """
    # If it's a .yaml configuration file
    if file.endswith(('.yaml', '.yml')):
        if not os.path.isfile(file):
            raise SchemaError('scenario file not found: {}'.format(file), pointer='/')
        config = get_cfg_defaults()
        return merge_cfg_file(config, file)
    # We have a problem
    else:
        raise SchemaError('You need to provide a .yaml scenario', pointer='/')


def resolve_spec_path(config):
    """Absolute path of ``scenario.spec`` (relative to the scenario file)."""
    spec = config.scenario.spec
    if not spec:
        return None
    if os.path.isabs(spec):
        return spec
    base = os.path.dirname(config.config) if config.config else os.getcwd()
    return os.path.join(base, spec)
