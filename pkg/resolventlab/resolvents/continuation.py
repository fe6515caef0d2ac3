"""Predictor-corrector tracking of a scalar complex root along a real parameter.

The root of F(z, t) = 0 is followed from a known root z0 at t = 0 up to a target
parameter: an Euler predictor along dz/dt = -F_t / F_z, a damped Newton corrector
that never leaves the domain, and step halving on failure. The tracked branch is
the analytic continuation of z0, so no global root search is involved.
"""

import cmath
import math
from dataclasses import dataclass, field

from resolventlab.utils.errors import ArgumentError, NoSolutionError, NumericalError
from resolventlab.utils.logging import log_debug


@dataclass
class TrackingOptions:
    tol: float = 1e-12
    min_step: float = 1e-10
    max_newton_iter: int = 50
    initial_step: float = 0.1
    max_damping: int = 10
    quick_iters: int = 4

    def __post_init__(self):
        if not self.tol > 0:
            raise ArgumentError('tolerance must be positive, got {}'.format(self.tol))
        if not 0 < self.min_step <= self.initial_step:
            raise ArgumentError('need 0 < min_step <= initial_step')
        if self.max_newton_iter < 1 or self.max_damping < 0:
            raise ArgumentError('need max_newton_iter >= 1 and max_damping >= 0')


@dataclass
class TrackResult:
    """End point of a tracked path and its history."""
    value: complex
    residual: float
    t_path: list = field(default_factory=list)
    z_path: list = field(default_factory=list)
    newton_iters: int = 0


def _finite(z):
    return cmath.isfinite(z)


class RootTracker:
    """
    Follow the root of ``residual(z, t) = 0`` in ``t``

    Parameters
    ----------
    residual : callable
        (z, t) -> F(z, t).
    jacobian : callable
        (z, t) -> dF/dz.
    contains : callable
        z -> bool, the open domain the root must stay in.
    tangent : callable or None
        (z, t) -> dz/dt for the Euler predictor; the previous root is reused when omitted.
    step_guard : callable or None
        (z_old, z_new) -> bool; a rejected step is halved like a failed corrector.
    options : TrackingOptions
    """

    def __init__(self, residual, jacobian, contains, tangent=None, step_guard=None, options=None):
        self.residual = residual
        self.jacobian = jacobian
        self.contains = contains
        self.tangent = tangent
        self.step_guard = step_guard
        self.options = options or TrackingOptions()

    def _predict(self, z, t, h):
        if self.tangent is None:
            return z
        try:
            guess = z + h * self.tangent(z, t)
        except ZeroDivisionError:
            return z
        if _finite(guess) and self.contains(guess):
            return guess
        return z

    def _newton_step(self, z, r, t):
        """One damped Newton update; ``None`` when no damping keeps the iterate admissible."""
        J = self.jacobian(z, t)
        if J == 0 or not _finite(J):
            return None
        dz = -r / J
        lam = 1.0
        for _ in range(self.options.max_damping + 1):
            z_try = z + lam * dz
            if _finite(z_try) and self.contains(z_try):
                r_try = self.residual(z_try, t)
                if _finite(r_try) and abs(r_try) < abs(r):
                    return z_try, r_try
            lam *= 0.5
        return None

    def correct(self, z, t):
        """
        Damped Newton at fixed ``t``

        Returns
        -------
        (z, residual, iterations) or None
            ``None`` when the corrector fails to reach the tolerance.
        """
        r = self.residual(z, t)
        if not _finite(r):
            raise NumericalError('non-finite residual at z={}, t={}'.format(z, t))
        for k in range(self.options.max_newton_iter + 1):
            if abs(r) <= self.options.tol:
                # one polishing update pushes the root to rounding level
                polished = self._newton_step(z, r, t) if r != 0 else None
                if polished is not None:
                    z, r = polished
                return z, abs(r), k
            if k == self.options.max_newton_iter:
                break
            update = self._newton_step(z, r, t)
            if update is None:
                return None
            z, r = update
        return None

    def track(self, z0, t_target, t_start=0.0):
        """
        Track the root from ``(z0, t_start)`` to ``t_target``

        Returns
        -------
        result : TrackResult

        Raises
        ------
        NoSolutionError
            The step size fell below ``min_step``: the root reached the boundary.
        """
        opts = self.options
        t, z = float(t_start), complex(z0)
        span = float(t_target) - t
        if span < 0:
            raise ArgumentError('tracking runs forward only (t_target={} < {})'.format(t_target, t))
        result = TrackResult(value=z, residual=abs(self.residual(z, t)), t_path=[t], z_path=[z])
        h = min(opts.initial_step, span) if span > 0 else 0.0
        while t < t_target:
            h = min(h, t_target - t)
            t_new = t_target if h >= t_target - t else t + h
            corrected = self.correct(self._predict(z, t, t_new - t), t_new)
            accepted = corrected is not None and (self.step_guard is None or self.step_guard(z, corrected[0]))
            if accepted:
                z, residual, iters = corrected
                t = t_new
                result.t_path.append(t)
                result.z_path.append(z)
                result.newton_iters += iters
                result.value, result.residual = z, residual
                if iters <= opts.quick_iters:
                    h *= 2.0
            else:
                h *= 0.5
                if h < opts.min_step:
                    log_debug('continuation collapsed at t={:.17g} near z={}'.format(t, z))
                    raise NoSolutionError(t, t_target, witness=z)
        return result


def default_step(t_target, t_max, initial_step):
    """First continuation step: min(initial_step, t_max/10, t_target)."""
    step = initial_step
    if t_max is not None and math.isfinite(t_max):
        step = min(step, 0.1 * t_max)
    return max(min(step, t_target), 0.0) if t_target > 0 else initial_step
