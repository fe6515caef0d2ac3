"""Adaptive Cash-Karp 5(4) integration of autonomous complex ODEs z' = G(z) inside a domain.
"""

import cmath

from resolventlab.domains.domains import boundary_distance, contains
from resolventlab.utils.errors import ArgumentError, NumericalError, TrajectoryTruncated


class CashKarp54:
    """
    Cash-Karp 5(4) pair: six stages, fifth-order propagation, embedded fourth-order error

    ``step`` returns the fifth-order update (local extrapolation) and the
    magnitude of the local truncation error estimate.
    """

    # stage weights per row; row 5 combines the stages into the fifth-order update
    BT = {
        0: [1 / 5],
        1: [3 / 40, 9 / 40],
        2: [3 / 10, -9 / 10, 6 / 5],
        3: [-11 / 54, 5 / 2, -70 / 27, 35 / 27],
        4: [1631 / 55296, 175 / 512, 575 / 13824, 44275 / 110592, 253 / 4096],
        5: [37 / 378, 0, 250 / 621, 125 / 594, 0, 512 / 1771],
    }

    # fifth-order minus embedded fourth-order weights
    TR = [-277 / 64512, 0, 6925 / 370944, -6925 / 202752, -277 / 14336, 277 / 7084]

    order = 5

    def step(self, f, y, h):
        k = [f(y)]
        for i in range(5):
            k.append(f(y + h * sum(b * ki for b, ki in zip(self.BT[i], k))))
        y_new = y + h * sum(b * ki for b, ki in zip(self.BT[5], k))
        error = abs(h * sum(e * ki for e, ki in zip(self.TR, k)))
        return y_new, error


def integrate(f, y0, t, kind, rk_tol=1e-10, boundary_eps=1e-12, max_steps=100000, h0=None, record=False):
    """
    Integrate z' = f(z) from 0 to ``t`` (negative ``t`` runs backwards)

    Parameters
    ----------
    f : callable
        Scalar complex right-hand side.
    y0 : complex
        Initial point inside the domain.
    t : float
        Final time.
    kind : DomainKind
        Domain the trajectory must stay in; steps that leave it are rejected.
    rk_tol : float
        Local error tolerance, relative to max(1, |z|).
    boundary_eps : float
        Distance to the boundary at which the trajectory is truncated.
    max_steps : int
        Cap on accepted plus rejected steps.
    h0 : float or None
        First step (default min(|t|, 0.05)).
    record : bool
        Whether to keep the accepted (s, z) pairs.

    Returns
    -------
    (value, path) : (complex, list)
        ``path`` is empty unless ``record``.

    Raises
    ------
    TrajectoryTruncated
        The trajectory came within ``boundary_eps`` of the boundary.
    """
    if not rk_tol > 0:
        raise ArgumentError('rk_tol must be positive')
    y = complex(y0)
    path = [(0.0, y)] if record else []
    if t == 0:
        return y, path
    method = CashKarp54()
    direction = 1.0 if t > 0 else -1.0
    span = abs(float(t))
    s = 0.0
    h = min(span, 0.05 if h0 is None else abs(h0))

    def rhs(z):
        return direction * complex(f(z))

    for _ in range(int(max_steps)):
        h = min(h, span - s)
        y_new, error = method.step(rhs, y, h)
        scale = rk_tol * max(1.0, abs(y))
        if not (cmath.isfinite(y_new) and contains(kind, y_new)):
            h *= 0.5
        elif error > scale:
            h *= max(0.2, 0.9 * (scale / error) ** (1.0 / method.order))
        else:
            s = span if h >= span - s else s + h
            y = y_new
            if record:
                path.append((direction * s, y))
            if s >= span:
                break
            if boundary_distance(kind, y) < boundary_eps:
                raise TrajectoryTruncated(direction * s, y, t)
            factor = 5.0 if error == 0 else min(5.0, max(0.2, 0.9 * (scale / error) ** (1.0 / method.order)))
            h *= factor
        if h < 1e-15 * max(1.0, span):
            raise TrajectoryTruncated(direction * s, y, t)
    else:
        raise NumericalError('ode integration exceeded {} steps at s={}'.format(max_steps, direction * s))
    return y, path
