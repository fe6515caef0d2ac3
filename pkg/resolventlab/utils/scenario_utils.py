import argparse
import os
from functools import partial
from time import time

import numpy as np
from tqdm import tqdm

from resolventlab.chains.field import as_field, certify_field, sample_times
from resolventlab.chains.loewner import sample_chain
from resolventlab.domains.domains import sample_points
from resolventlab.evaluation.checks import run_check
from resolventlab.evaluation.figures import FIGURE_COLUMNS, make_figure
from resolventlab.freeprob.additive import f_transform, free_semigroup_f
from resolventlab.freeprob.stieltjes import stieltjes_invert
from resolventlab.generators.base import evaluate_many
from resolventlab.generators.measures import CIRCLE, REAL
from resolventlab.generators.serialization import load_spec
from resolventlab.resolvents.resolvent import solve_resolvent
from resolventlab.resolvents.window import existence_window
from resolventlab.semigroups.flow import convergence_table, ode_flow, ode_trajectory
from resolventlab.utils.config import apply_overrides, parse_scenario_file, resolve_spec_path, validate_scenario
from resolventlab.utils.errors import (ArgumentError, DomainError, NoSolutionError, NumericalError,
                                       ResolventLabError, SchemaError, TrajectoryTruncated, UnsupportedError)
from resolventlab.utils.logging import (log_error, log_info, log_level, printcolor, printcolor_single,
                                        progress_disabled, timing)
from resolventlab.utils.output import write_csv, write_json
from resolventlab.utils.parallel import map_points

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2
COMMANDS = ('resolvent', 'chain', 'semigroup', 'freeconv', 'verify', 'figure')


def parse_args(argv=None):
    """Parse arguments for the scenario script"""
    parser = argparse.ArgumentParser(description='resolventlab scenario runner')
    parser.add_argument('--scenario', type=str, required=True, help='Scenario file (.yaml)')
    parser.add_argument('--out', type=str, default=None, help='Artifact folder (overrides output.path)')
    parser.add_argument('--tol', type=float, default=None, help='Solver residual tolerance')
    parser.add_argument('--seed', type=int, default=None, help='Seed for sample points')
    parser.add_argument('--jobs', type=int, default=None, help='Worker processes')
    return parser.parse_args(argv)


def error_report(err):
    """Machine-readable description of a library exception."""
    report = {'error': type(err).__name__, 'message': str(err)}
    if isinstance(err, SchemaError):
        report['pointer'] = err.pointer
    if isinstance(err, NoSolutionError):
        report.update(last_good_t=err.last_good_t, t_target=err.t_target, witness=err.witness)
    if isinstance(err, TrajectoryTruncated):
        report.update(s_reached=err.s_reached, value=err.value, t_target=err.t_target)
    return report


def _resolve_point(G, times, solver_kw, w):
    # errors are returned, not raised: custom exceptions do not survive a worker pool
    records = []
    for t in times:
        try:
            records.append(solve_resolvent(G, t, w, **solver_kw).to_record())
        except ResolventLabError as err:
            return records, error_report(err)
    return records, None


class ScenarioRunner:
    """
    Runs one scenario: reads its spec, evaluates the command and writes artifacts

    ``run`` maps library exceptions to exit codes: 2 for input errors, 1 for
    numerical failures and failed verifications.
    """

    def __init__(self, config):
        self.config = config
        self.out = config.output.path
        self.digits = config.output.digits
        self.solver_kw = dict(tol=config.solver.tol, min_step=config.solver.min_step,
                              max_newton_iter=config.solver.max_newton_iter,
                              initial_step=config.solver.initial_step, max_damping=config.solver.max_damping)
        self.summary = {'name': config.name or os.path.splitext(os.path.basename(config.config))[0],
                        'command': config.scenario.command, 'artifacts': []}
        os.makedirs(self.out, exist_ok=True)

    # helpers

    def _spec(self):
        path = resolve_spec_path(self.config)
        if path is None:
            raise SchemaError('command {!r} needs a spec file'.format(self.config.scenario.command),
                              pointer='/scenario/spec')
        nodes = {REAL: self.config.quadrature.real_nodes, CIRCLE: self.config.quadrature.circle_nodes}
        return load_spec(path, nodes)

    def _pick(self, spec, *keys):
        for key in keys:
            if key in spec:
                return spec[key]
        raise SchemaError('spec needs one of {}'.format(keys), pointer='/')

    def _points(self, domain):
        points = [complex(re, im) for re, im in self.config.scenario.points]
        if self.config.scenario.sample_n > 0:
            points += list(sample_points(domain, self.config.scenario.sample_n, self.config.arch.seed))
        if not points:
            raise SchemaError('no query points (set scenario.points or scenario.sample_n)',
                              pointer='/scenario/points')
        return np.array(points, dtype=complex)

    def _times(self):
        times = [float(t) for t in self.config.scenario.t_grid]
        if not times:
            raise SchemaError('empty time grid', pointer='/scenario/t_grid')
        return times

    def _csv(self, name, header, rows):
        path = write_csv(os.path.join(self.out, name), header, rows, self.digits)
        self.summary['artifacts'].append(name)
        return path

    def _json(self, name, data):
        path = write_json(os.path.join(self.out, name), data)
        self.summary['artifacts'].append(name)
        return path

    # commands

    def run_resolvent(self):
        G = self._pick(self._spec(), 'generator')
        times, points = self._times(), self._points(G.domain)
        try:
            self.summary['window'] = existence_window(G).to_dict()
        except (UnsupportedError, NumericalError) as err:
            self.summary['window'] = error_report(err)
        per_point = map_points(partial(_resolve_point, G, times, self.solver_kw), points,
                               jobs=self.config.arch.jobs, desc='resolvent', level='info')
        records = [r for rows, _ in per_point for r in rows]
        self._json('resolvent.json', records)
        failures = [err for _, err in per_point if err is not None]
        if failures:
            self._json('report.json', {'passed': False, 'violation': failures[0], 'n_failures': len(failures)})
            log_error(failures[0]['message'])
            return False
        return True

    def run_chain(self):
        F = as_field(self._pick(self._spec(), 'field', 'generator'))
        times, points = self._times(), self._points(F.domain)
        test = self.config.generator_test
        self.summary['certificate'] = certify_field(F, sample_times(F), grid_n=test.grid_n, r_max=test.r_max).to_dict()
        chain = sample_chain(F, times, points, jobs=self.config.arch.jobs, **self.solver_kw)
        rows = [(t, z.real, z.imag, k.real, k.imag, member, residual)
                for t, z, k, member, residual in chain.rows()]
        self._csv('chain.csv', ('t', 'w_re', 'w_im', 'k_re', 'k_im', 'member', 'residual'), rows)
        return True

    def run_semigroup(self):
        G = self._pick(self._spec(), 'generator')
        points, t = self._points(G.domain), float(self.config.scenario.t)
        ode = self.config.ode
        trajectory, convergence = [], []
        for i, w in enumerate(tqdm(points, desc='semigroup', disable=progress_disabled('info'))):
            for s, z in ode_trajectory(G, t, w, rk_tol=ode.rk_tol, boundary_eps=ode.boundary_eps,
                                       max_steps=ode.max_steps):
                trajectory.append((i, s, z.real, z.imag))
            reference = ode_flow(G, t, w, rk_tol=ode.rk_tol, boundary_eps=ode.boundary_eps, max_steps=ode.max_steps)
            for n, error in convergence_table(G, t, w, self.config.scenario.n_list, reference=reference,
                                              **self.solver_kw):
                convergence.append((w.real, w.imag, n, error))
        self._csv('trajectory.csv', ('point', 's', 're', 'im'), trajectory)
        self._csv('convergence.csv', ('w_re', 'w_im', 'n', 'error'), convergence)
        return True

    def run_freeconv(self):
        spec = self._spec()
        if 'measure' in spec:
            mu = spec['measure']
            cauchy = mu.cauchy

            def transform(z):
                return f_transform(mu, z)
        elif 'triple' in spec:
            triple, t = spec['triple'], float(self.config.scenario.t)

            def transform(z):
                return evaluate_many(lambda w: free_semigroup_f(triple, t, w, **self.solver_kw), z)

            def cauchy(z):
                return 1.0 / np.asarray(transform(z))
        else:
            raise SchemaError('freeconv needs a measure or a triple', pointer='/')
        lo, hi, n = self.config.scenario.x_grid
        xs = np.linspace(float(lo), float(hi), int(n))
        density = stieltjes_invert(cauchy, xs, self.config.freeprob.stieltjes_eps)
        self._csv('density.csv', ('x', 'density', 'flagged'), density.rows())
        rows = []
        for y in self.config.scenario.y_levels:
            z = xs + 1j * float(y)
            F = np.asarray(transform(z))
            G = 1.0 / F
            rows += [(x, y, g.real, g.imag, f.real, f.imag) for x, g, f in zip(xs, G, F)]
        self._csv('transforms.csv', ('x', 'y', 'G_re', 'G_im', 'F_re', 'F_im'), rows)
        return True

    def run_verify(self):
        name = self.config.scenario.check
        if not name:
            raise SchemaError('verify needs scenario.check', pointer='/scenario/check')
        report = run_check(name, seed=self.config.arch.seed, rk_tol=self.config.ode.rk_tol,
                           gamma=self.config.freeprob.wedge_gamma, delta=self.config.freeprob.wedge_delta,
                           eps_ladder=tuple(self.config.freeprob.stieltjes_eps), **self.solver_kw)
        self._json('report.json', report.to_dict())
        (log_info if report.passed else log_error)('check {}: {}'.format(name, 'passed' if report.passed else 'FAILED'))
        return report.passed

    def run_figure(self):
        name = self.config.scenario.figure
        if not name:
            raise SchemaError('figure needs scenario.figure', pointer='/scenario/figure')
        lo, hi, n = self.config.scenario.x_grid
        rows = make_figure(name, t=float(self.config.scenario.t), x_grid=(lo, hi, int(n)),
                           y_levels=tuple(self.config.scenario.y_levels), rk_tol=self.config.ode.rk_tol)
        self._csv('{}.csv'.format(name), FIGURE_COLUMNS, rows)
        return True

    @timing
    def run(self):
        """Execute the command; returns the exit code and writes summary.json."""
        command = self.config.scenario.command
        start = time()
        try:
            if command not in COMMANDS:
                raise SchemaError('unknown command {!r}; expected one of {}'.format(command, COMMANDS),
                                  pointer='/scenario/command')
            code = EXIT_OK if getattr(self, 'run_' + command)() else EXIT_VERIFY
        except (ArgumentError, DomainError, UnsupportedError) as err:
            log_error('input error: {}'.format(err))
            self._json('report.json', {'passed': False, **error_report(err)})
            code = EXIT_INPUT
        except NumericalError as err:
            log_error('numerical failure: {}'.format(err))
            self._json('report.json', {'passed': False, 'violation': error_report(err)})
            code = EXIT_VERIFY
        self.summary.update(exit_code=code, seconds=time() - start)
        write_json(os.path.join(self.out, 'summary.json'), self.summary)
        return code


def run_scenario(scenario, out=None, tol=None, seed=None, jobs=None):
    """
    Parse a scenario file, apply the command line overrides and run it

    Returns
    -------
    code : int
        0 on success, 1 on a verification or numerical failure, 2 on an input error.
    """
    try:
        log_level()
        config = parse_scenario_file(scenario)
        config = apply_overrides(config, tol=tol, seed=seed, jobs=jobs, out=out)
        validate_scenario(config)
    except ResolventLabError as err:
        printcolor_single('input error: {}'.format(err), 'red')
        if out is not None:
            write_json(os.path.join(out, 'summary.json'),
                       {'name': os.path.basename(scenario), 'exit_code': EXIT_INPUT, **error_report(err)})
        return EXIT_INPUT
    printcolor('-'*25 + ' ' + config.scenario.command.upper() + ' ' + '-'*25, 'cyan')
    return ScenarioRunner(config).run()
