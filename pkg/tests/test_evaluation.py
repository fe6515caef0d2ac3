import math

import numpy as np
import pytest

from resolventlab.chains.loewner import DecreasingReport
from resolventlab.evaluation import checks
from resolventlab.evaluation.checks import (CHECKS, CheckReport, check_solution_exists, run_check,
                                            semicircle_semigroup_oracle, wedge_points)
from resolventlab.evaluation.figures import FIGURE_COLUMNS, make_figure
from resolventlab.freeprob.additive import in_wedge
from resolventlab.utils.errors import ArgumentError


@pytest.mark.parametrize('name', sorted(set(CHECKS) - {'solution_exists'}))
def test_checks_pass(name):
    report = run_check(name, seed=0)
    assert report.passed, report.details
    assert report.to_dict()['name'] == name


def test_solution_exists_on_coarse_grid():
    report = check_solution_exists(grid_n=20)
    assert report
    assert report.details['n_points'] == 400


def test_no_solution_witness():
    report = run_check('no_solution')
    details = report.details
    assert not details['generator_test']['passed']
    assert details['generator_test']['boundary_value'] == pytest.approx(checks.NO_SOLUTION_BOUNDARY, abs=1e-3)
    assert details['k1_max_error'] < 1e-10
    assert details['decreasing']['ok'] is False
    violation = details['decreasing']['violation']
    assert violation['s'] <= 1.0 < violation['t']


def test_no_solution_needs_the_jump_violation(monkeypatch):
    monkeypatch.setattr(checks, 'decreasing_check',
                        lambda *args, **kwargs: DecreasingReport(ok=True, n_points=1))
    report = run_check('no_solution')
    assert not report.passed
    assert report.details['decreasing'] == {'ok': True, 'n_points': 1}


def test_run_check_filters_keywords():
    report = run_check('strip_bound', seed=5, gamma=2.0, tol=1e-12)
    assert report.details['zeros'] == 1
    with pytest.raises(ArgumentError):
        run_check('bogus')


def test_check_report():
    report = CheckReport('demo', False, {'x': 1})
    assert not report
    assert report.to_dict() == {'name': 'demo', 'passed': False, 'details': {'x': 1}}


def test_wedge_points():
    points = wedge_points(50, seed=3)
    assert all(in_wedge(z) for z in points)


def test_semicircle_oracle_solves_quadratic():
    for w in (1j, 0.5 + 0.1j, -3.0 + 2.0j):
        z = semicircle_semigroup_oracle(1.5, w)
        assert z.imag > 0
        assert z * z - w * z + 1.5 == pytest.approx(0.0, abs=1e-12)


def test_semicircle_figure():
    rows = make_figure('semicircle_f', x_grid=(-3.0, 3.0, 7), y_levels=(0.5,))
    assert len(FIGURE_COLUMNS) == len(rows[0])
    boundary = [r for r in rows if r[0] == 'boundary']
    assert [r[1] for r in boundary] == [-1.0, 0.0, 1.0]
    assert boundary[1][3:] == pytest.approx((0.0, 1.0), abs=1e-12)
    assert boundary[2][3:] == pytest.approx((0.5, math.sqrt(3.0) / 2.0), abs=1e-12)
    lines = [r for r in rows if r[0] == 'line']
    assert len(lines) == 7
    assert all(r[4] >= 0.5 for r in lines)
    with pytest.raises(ArgumentError):
        make_figure('semicircle_f', y_levels=(0.0,))


def test_monotone_figure():
    rows = make_figure('monotone_semicircle', t=1.0, x_grid=(-1.0, 1.0, 3), y_levels=(1.0,), rk_tol=1e-12)
    assert len(rows) == 3
    _, x, y, re, im = rows[1]
    assert (x, y) == (0.0, 1.0)
    assert complex(re, im) == pytest.approx(1j * math.sqrt(3.0), abs=1e-7)
    assert np.allclose([r[3] for r in rows], [-r[3] for r in rows[::-1]], atol=1e-7)


def test_unknown_figure():
    with pytest.raises(ArgumentError):
        make_figure('loewner_hull')
