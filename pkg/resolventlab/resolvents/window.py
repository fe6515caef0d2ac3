"""Existence windows of nonlinear resolvents and the strip bound c = inf |Im G(x)|.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from resolventlab.domains.domains import DomainKind
from resolventlab.generators.base import Classification, Generator, evaluate_many
from resolventlab.generators.criteria import angular_residue_b
from resolventlab.utils.errors import ArgumentError, UnsupportedError


@dataclass(frozen=True)
class ExistenceWindow:
    """Resolvents exist for t in [0, t_max); ``parameter`` is b (Pick) or c (strip)."""
    t_max: float
    reason: Classification
    parameter: float = None

    def contains(self, t):
        return 0 <= t < self.t_max

    def to_dict(self):
        return {'t_max': self.t_max if math.isfinite(self.t_max) else 'inf',
                'reason': self.reason.value, 'parameter': self.parameter}


def strip_inf_c(G, x_range=(-10.0, 30.0), n=2001):
    """
    Grid-refined estimate of c = inf over real x of |Im G(x)|

    Parameters
    ----------
    G : Generator or callable
        Generator on the strip (the real axis lies inside it).
    x_range : tuple
        Search interval; the value is an upper bound of the infimum over the line.
    n : int
        Grid points before the bounded scalar refinement.

    Returns
    -------
    c : float
    """
    lo, hi = float(x_range[0]), float(x_range[1])
    if not hi > lo or n < 3:
        raise ArgumentError('strip_inf_c needs x_lo < x_hi and n >= 3')
    func = G.value if isinstance(G, Generator) else (lambda z: evaluate_many(G, z))
    xs = np.linspace(lo, hi, int(n))
    values = np.abs(np.imag(np.asarray(func(xs + 0j))))
    i = int(np.argmin(values))
    best = float(values[i])
    if best == 0.0:
        return 0.0
    bracket = (xs[max(i - 1, 0)], xs[min(i + 1, len(xs) - 1)])
    refined = minimize_scalar(lambda x: abs(complex(func(complex(x))).imag), bounds=bracket,
                              method='bounded', options={'xatol': 1e-12})
    return min(best, float(refined.fun))


def existence_window(G, x_range=(-10.0, 30.0), n=2001):
    """
    Parameter window in which the resolvent equation w = z - tG(z) is solvable

    Parameters
    ----------
    G : Generator
        Generator with domain and classification metadata.
    x_range, n :
        Grid of :func:`strip_inf_c` when c is not known in closed form.

    Returns
    -------
    window : ExistenceWindow
        Disk and finite Denjoy-Wolff cases: all t. Pick case: t < 1/b. Strip case: t < pi/(2c).
    """
    if G.domain is DomainKind.DISK:
        return ExistenceWindow(math.inf, Classification.BOUNDED)
    cls = G.classification
    if G.domain is DomainKind.HALF_PLANE:
        if cls is Classification.PICK:
            b = angular_residue_b(G)
            return ExistenceWindow(1.0 / b if b > 0 else math.inf, cls, b)
        if cls is Classification.FINITE_DW:
            return ExistenceWindow(math.inf, cls)
    if G.domain is DomainKind.STRIP and cls is Classification.STRIP_INFINITY:
        c = G.strip_c if G.strip_c is not None else strip_inf_c(G, x_range, n)
        return ExistenceWindow(math.pi / (2.0 * c) if c > 0 else math.inf, cls, c)
    raise UnsupportedError('cannot classify {!r} on the {} domain'.format(G, G.domain.value))


def quick_window(G):
    """The window when it needs no numerical search, else ``None``."""
    if G.domain is DomainKind.DISK or G.classification is Classification.FINITE_DW:
        return existence_window(G)
    if G.classification is Classification.PICK and G.pick_alpha is not None:
        return existence_window(G)
    if G.classification is Classification.STRIP_INFINITY and G.strip_c is not None:
        return existence_window(G)
    return None
