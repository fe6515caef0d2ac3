"""Plot data: F-transform images of the upper half-plane for the semicircle law.
"""

import numpy as np

from resolventlab.freeprob.additive import FIDTriple, boundary_f_transform, f_transform, monotone_semigroup_f
from resolventlab.freeprob.measures import semicircle
from resolventlab.generators.measures import FiniteMeasure
from resolventlab.utils.errors import ArgumentError

FIGURE_COLUMNS = ('curve', 'x', 'y', 're', 'im')


def x_axis(x_grid):
    lo, hi, n = x_grid
    return np.linspace(float(lo), float(hi), int(n))


def semicircle_f(x_grid=(-4.0, 4.0, 161), y_levels=(0.1, 0.5, 1.0, 2.0), variance=1.0, **_):
    """
    Boundary curve F(x + i0) = x/2 + i sqrt(1 - x^2/4) on (-2, 2) and the images
    F(x + iy) of horizontal lines

    Returns
    -------
    rows : list of tuple
        (curve, x, y, Re F, Im F); curve is ``boundary`` or ``line``.
    """
    mu = semicircle(variance=variance)
    xs = x_axis(x_grid)
    edge = 2.0 * np.sqrt(variance)
    inner = xs[np.abs(xs) < edge]
    rows = [('boundary', x, 0.0, v.real, v.imag) for x, v in zip(inner, np.atleast_1d(boundary_f_transform(mu, inner)))]
    for y in y_levels:
        if not y > 0:
            raise ArgumentError('horizontal lines need y > 0, got {}'.format(y))
        values = np.atleast_1d(f_transform(mu, xs + 1j * y))
        rows += [('line', x, float(y), v.real, v.imag) for x, v in zip(xs, values)]
    return rows


def monotone_semicircle(t=1.0, x_grid=(-4.0, 4.0, 161), y_levels=(0.1, 0.5, 1.0, 2.0), rk_tol=1e-10, **_):
    """Images of horizontal lines under g_t, the semigroup of G(z) = -1/z (monotone arcsine laws)."""
    triple = FIDTriple(a=0.0, rho=FiniteMeasure.dirac(0.0))
    xs = x_axis(x_grid)
    rows = []
    for y in y_levels:
        if not y > 0:
            raise ArgumentError('horizontal lines need y > 0, got {}'.format(y))
        for x in xs:
            v = monotone_semigroup_f(triple, t, complex(x, y), rk_tol=rk_tol)
            rows.append(('line', float(x), float(y), v.real, v.imag))
    return rows


FIGURES = {
    'semicircle_f': semicircle_f,
    'monotone_semicircle': monotone_semicircle,
}


def make_figure(name, **kw):
    if name not in FIGURES:
        raise ArgumentError('unknown figure {!r}; expected one of {}'.format(name, sorted(FIGURES)))
    return FIGURES[name](**kw)
