"""Nonlinear resolvents J_t(w): the root z of w = z - t G(z) continued from z = w at t = 0.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from resolventlab.domains.domains import as_point, contains, require_in_domain
from resolventlab.generators.base import Classification, CustomGenerator, Generator, evaluate_many
from resolventlab.generators.criteria import angular_residue_b
from resolventlab.resolvents.continuation import RootTracker, TrackingOptions, default_step
from resolventlab.resolvents.window import quick_window
from resolventlab.utils.errors import ArgumentError, SingularityError
from resolventlab.utils.logging import log_debug

SINGULAR_THRESHOLD = 1e-14


@dataclass(frozen=True)
class ResolventSolution:
    """Solver output; ``residual = |value - t G(value) - w|``."""
    t: float
    w: complex
    value: complex
    deriv: complex
    residual: float
    t_path: tuple = field(default=())
    newton_iters: int = 0

    def to_record(self):
        return {'t': self.t, 'w': [self.w.real, self.w.imag], 'z': [self.value.real, self.value.imag],
                'residual': self.residual, 'deriv': [self.deriv.real, self.deriv.imag],
                'iters': self.newton_iters}


def _check_time(t):
    t = float(t)
    if not (math.isfinite(t) and t >= 0):
        raise ArgumentError('resolvent time must be finite and >= 0, got {}'.format(t))
    return t


def solve_resolvent(G, t, w, tol=1e-12, min_step=1e-10, max_newton_iter=50, initial_step=0.1,
                    max_damping=10):
    """
    Solve w = z - t G(z) for z on G's domain

    Parameters
    ----------
    G : Generator
        Infinitesimal generator.
    t : float
        Resolvent parameter, t >= 0.
    w : complex
        Point of G's domain.
    tol : float
        Residual tolerance.
    min_step, max_newton_iter, initial_step, max_damping :
        Continuation controls (see :class:`TrackingOptions`).

    Returns
    -------
    solution : ResolventSolution
        The root continued from J_0 = id, its derivative 1/(1 - t G'(z)) and the path.

    Raises
    ------
    NoSolutionError
        The root reached the boundary before ``t`` (reports the last good t).
    SingularityError
        1 - t G'(z) vanishes at the root.
    """
    t = _check_time(t)
    w = as_point(w)
    require_in_domain(G.domain, w)
    if t == 0.0:
        return ResolventSolution(t=0.0, w=w, value=w, deriv=1 + 0j, residual=0.0, t_path=(0.0,))
    window = quick_window(G)
    t_max = None if window is None else window.t_max
    if window is not None and not window.contains(t):
        log_debug('t={} lies outside the existence window [0, {})'.format(t, t_max))
    options = TrackingOptions(tol=tol, min_step=min_step, max_newton_iter=max_newton_iter,
                              initial_step=max(default_step(t, t_max, initial_step), min_step),
                              max_damping=max_damping)
    kind = G.domain

    def residual(z, s):
        return z - s * complex(G.value(z)) - w

    def jacobian(z, s):
        return 1.0 - s * complex(G.derivative(z))

    def tangent(z, s):
        return complex(G.value(z)) / (1.0 - s * complex(G.derivative(z)))

    tracker = RootTracker(residual, jacobian, lambda z: contains(kind, z), tangent=tangent, options=options)
    track = tracker.track(w, t)
    z = track.value
    denom = 1.0 - t * complex(G.derivative(z))
    if abs(denom) < SINGULAR_THRESHOLD:
        raise SingularityError('1 - tG\'(z) vanishes at z={} (t={})'.format(z, t))
    return ResolventSolution(t=t, w=w, value=z, deriv=1.0 / denom, residual=track.residual,
                             t_path=tuple(track.t_path), newton_iters=track.newton_iters)


def resolvent_derivative(G, t, w, **solver_kw):
    """J_t'(w) = 1/(1 - t G'(J_t(w)))."""
    return solve_resolvent(G, t, w, **solver_kw).deriv


def pick_reduced_resolvent(G, t, w, **solver_kw):
    """
    J_t(w) for a Pick generator through its b-free part

    With b = angular residue and t < 1/b, J_t(w) is the time-t resolvent of
    (G(z) - b z)/(1 - t b) at w/(1 - t b).
    """
    t = _check_time(t)
    b = angular_residue_b(G)
    scale = 1.0 - t * b
    if scale <= 0:
        raise ArgumentError('t={} is outside the Pick window [0, {})'.format(t, 1.0 / b))
    reduced = CustomGenerator(lambda z: (G.value(z) - b * z) / scale, G.domain,
                              derivative=lambda z: (G.derivative(z) - b) / scale,
                              classification=Classification.PICK, pick_alpha=0.0, vectorized=True,
                              name='pick_reduced')
    solution = solve_resolvent(reduced, t, as_point(w) / scale, **solver_kw)
    return solution.value


class ResolventComposite(Generator):
    """
    G o J_t as a generator-like value on G's domain

    J_t fixes the Denjoy-Wolff point, so ``tau`` carries over.
    """
    name = 'resolvent_composite'

    def __init__(self, G, t, **solver_kw):
        self.G = G
        self.t = _check_time(t)
        self.solver_kw = solver_kw
        self.domain = G.domain
        self.tau = G.tau
        self.classification = G.classification

    def resolve(self, w):
        return solve_resolvent(self.G, self.t, w, **self.solver_kw).value

    def value(self, z):
        return evaluate_many(lambda w: self.G.value(self.resolve(w)), z)

    def __repr__(self):
        return '{!r} o J_{:g}'.format(self.G, self.t)


def resolvent_generator(G, t, **solver_kw):
    """The composite G o J_t, a generator whenever G is one."""
    return ResolventComposite(G, t, **solver_kw)


def resolve_many(G, t, points, **solver_kw):
    """Vector of J_t values at ``points``."""
    return np.array([solve_resolvent(G, t, w, **solver_kw).value for w in np.ravel(points)])
