"""Semigroups F_t generated by G: exponential formula, ODE flow and closed forms.
"""

from dataclasses import dataclass, field

import numpy as np

from resolventlab.domains.domains import as_point, contains, require_in_domain, sample_points
from resolventlab.resolvents.resolvent import solve_resolvent
from resolventlab.semigroups.runge_kutta import integrate
from resolventlab.utils.errors import ArgumentError, NumericalError

METHODS = ('exp_formula', 'ode_flow', 'closed_form')


def exp_formula(G, t, n, w, **solver_kw):
    """
    n-fold composition of the time-(t/n) resolvent applied to w

    Every inner solve is checked for its residual and for staying in the domain.
    """
    n = int(n)
    if n < 1:
        raise ArgumentError('exp_formula needs n >= 1, got {}'.format(n))
    w = as_point(w)
    require_in_domain(G.domain, w)
    tol = solver_kw.get('tol', 1e-12)
    step = float(t) / n
    z = w
    for _ in range(n):
        solution = solve_resolvent(G, step, z, **solver_kw)
        if solution.residual > tol or not contains(G.domain, solution.value):
            raise NumericalError('inner resolvent left the identity branch at z={}'.format(z))
        z = solution.value
    return z


def ode_trajectory(G, t, w, rk_tol=1e-10, boundary_eps=1e-12, max_steps=100000):
    """Accepted Runge-Kutta steps (s, F_s(w)) for s from 0 to t."""
    w = as_point(w)
    require_in_domain(G.domain, w)
    _, path = integrate(lambda z: G.value(z), w, float(t), G.domain, rk_tol=rk_tol,
                        boundary_eps=boundary_eps, max_steps=max_steps, record=True)
    return path


def ode_flow(G, t, w, rk_tol=1e-10, boundary_eps=1e-12, max_steps=100000):
    """
    F_t(w) by adaptive integration of z' = G(z); negative t runs the reverse flow

    Raises
    ------
    TrajectoryTruncated
        The trajectory came within ``boundary_eps`` of the boundary.
    """
    w = as_point(w)
    require_in_domain(G.domain, w)
    value, _ = integrate(lambda z: G.value(z), w, float(t), G.domain, rk_tol=rk_tol,
                         boundary_eps=boundary_eps, max_steps=max_steps)
    return value


def closed_form_flow(G, t, w):
    """Catalog semigroup F_t(w); raises UnsupportedError when none is known."""
    w = as_point(w)
    require_in_domain(G.domain, w)
    return complex(G.flow(float(t), w))


@dataclass
class SemigroupApprox:
    t: float
    n: int
    method: str
    values: dict = field(default_factory=dict)

    def __getitem__(self, z):
        return self.values[complex(z)]


def approximate_semigroup(G, t, points, method='ode_flow', n=64, **kw):
    """
    F_t at a set of points by one of ``exp_formula``, ``ode_flow`` or ``closed_form``

    Returns
    -------
    approx : SemigroupApprox
    """
    if method not in METHODS:
        raise ArgumentError('unknown semigroup method {!r}; expected one of {}'.format(method, METHODS))
    values = {}
    for w in np.ravel(points):
        w = complex(w)
        if method == 'exp_formula':
            values[w] = exp_formula(G, t, n, w, **kw)
        elif method == 'ode_flow':
            values[w] = ode_flow(G, t, w, **kw)
        else:
            values[w] = closed_form_flow(G, t, w)
    return SemigroupApprox(t=float(t), n=int(n) if method == 'exp_formula' else 1, method=method, values=values)


def convergence_table(G, t, w, ns, reference=None, rk_tol=1e-10, **solver_kw):
    """
    Rows (n, |J_{t/n}^n(w) - F_t(w)|) against the ODE flow (or a given reference)
    """
    if reference is None:
        reference = ode_flow(G, t, w, rk_tol=rk_tol)
    return [(int(n), abs(exp_formula(G, t, n, w, **solver_kw) - reference)) for n in ns]


def semigroup_law_check(G, s, t, sample_n=20, n_iter=64, seed=0, method='ode_flow', rk_tol=1e-10, **solver_kw):
    """
    max over sample points of |F_{s+t}(w) - F_s(F_t(w))|

    Parameters
    ----------
    G : Generator
    s, t : float
        Non-negative times.
    sample_n : int
        Seeded sample points.
    n_iter : int
        Iterations per unit time for ``method='exp_formula'``.
    method : str
        ``ode_flow`` (reference) or ``exp_formula``.
    """
    if s < 0 or t < 0:
        raise ArgumentError('semigroup law check needs s, t >= 0')
    if method == 'ode_flow':
        def F(time, w):
            return ode_flow(G, time, w, rk_tol=rk_tol)
    elif method == 'exp_formula':
        def F(time, w):
            return exp_formula(G, time, max(1, int(np.ceil(n_iter * time))), w, **solver_kw)
    else:
        raise ArgumentError('semigroup law check supports ode_flow and exp_formula, got {!r}'.format(method))
    deviation = 0.0
    for w in sample_points(G.domain, sample_n, seed):
        w = complex(w)
        deviation = max(deviation, abs(F(s + t, w) - F(s, F(t, w))))
    return deviation
