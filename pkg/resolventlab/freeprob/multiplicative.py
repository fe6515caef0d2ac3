"""psi, eta and Sigma transforms on the unit circle; multiplicative free convolution
semigroups and the resolvent family they induce on the upper half-plane.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from resolventlab.domains.domains import DomainKind, as_point, contains, require_in_domain
from resolventlab.generators.base import Classification, Generator
from resolventlab.generators.measures import CIRCLE, FiniteMeasure
from resolventlab.generators.representations import HerglotzData
from resolventlab.resolvents.continuation import RootTracker, TrackingOptions
from resolventlab.utils.errors import ArgumentError, NumericalError, SingularityError

SINGULAR_THRESHOLD = 1e-14
BRANCH_STEP = 0.5 * math.pi
IDENTITY_TOL = 1e-8


def _out(value):
    return complex(value) if np.ndim(value) == 0 else value


def psi(mu, z):
    """psi_mu(z) = int x z/(1 - x z) mu(dx) over the unit circle."""
    require_in_domain(DomainKind.DISK, z)
    z = np.asarray(z, dtype=complex)
    return _out(mu.measure.integrate(lambda z, x: x * z / (1.0 - x * z), z))


def _psi_derivative(mu, z):
    return complex(mu.measure.integrate(lambda z, x: x / (1.0 - x * z) ** 2, np.asarray(z, dtype=complex)))


def mult_transforms(mu, z):
    """
    (psi_mu(z), eta_mu(z)) with eta = psi/(1 + psi)

    Raises
    ------
    SingularityError
        1 + psi_mu(z) vanishes.
    """
    p = np.asarray(psi(mu, z))
    if np.any(np.abs(1.0 + p) < SINGULAR_THRESHOLD):
        raise SingularityError('1 + psi vanishes at {}'.format(z))
    return _out(p), _out(p / (1.0 + p))


def sigma_transform_measure(mu, z, tol=1e-14, max_iter=100):
    """
    Sigma_mu(z) = eta_mu^{-1}(z)/z near 0 for a circle measure with non-zero mean

    eta_mu is inverted by Newton from the seed z/mean; Sigma_mu(0) = 1/mean.
    """
    if not mu.mean_nonzero:
        raise ArgumentError('{!r} has zero mean; eta is not invertible at 0'.format(mu))
    z = as_point(z)
    require_in_domain(DomainKind.DISK, z)
    if z == 0:
        return 1.0 / mu.mean
    zeta = z / mu.mean
    for _ in range(max_iter):
        if not contains(DomainKind.DISK, zeta):
            break
        p = complex(psi(mu, zeta))
        residual = p / (1.0 + p) - z
        if abs(residual) <= tol * max(1.0, abs(z)):
            return zeta / z
        d = _psi_derivative(mu, zeta) / (1.0 + p) ** 2
        if d == 0:
            break
        step = -residual / d
        lam = 1.0
        while not contains(DomainKind.DISK, zeta + lam * step) and lam > 1e-8:
            lam *= 0.5
        zeta = zeta + lam * step
    raise NumericalError('eta inversion near {} did not converge'.format(z))


@dataclass(frozen=True)
class MultSemigroupData:
    """
    Sigma_{mu_t} = exp(t u) with u(z) = -i alpha + int (1 + z x)/(1 - z x) rho(dx)

    Parameters
    ----------
    alpha : float
        Rotation part.
    rho : FiniteMeasure
        Non-negative finite measure on the unit circle.
    """
    alpha: float = 0.0
    rho: FiniteMeasure = field(default_factory=lambda: FiniteMeasure.zero(CIRCLE))

    @property
    def u(self):
        return HerglotzData(imag_const=self.alpha, rho=self.rho)

    def to_dict(self):
        return dict(alpha=float(self.alpha), **self.rho.to_dict())


def sigma_transform(data, t, z):
    """Sigma_{mu_t}(z) = exp(t u(z)); Sigma_{mu_{s+t}} = Sigma_{mu_s} Sigma_{mu_t} by construction."""
    require_in_domain(DomainKind.DISK, z)
    return _out(np.exp(float(t) * np.asarray(data.u.value(z))))


def _check_time(t):
    t = float(t)
    if not (math.isfinite(t) and t >= 0):
        raise ArgumentError('time must be finite and >= 0, got {}'.format(t))
    return t


def _eta_tracker(data, z, options, step_guard=None):
    u = data.u

    def residual(eta, s):
        return eta * cmath.exp(s * complex(u.value(eta))) - z

    def jacobian(eta, s):
        return cmath.exp(s * complex(u.value(eta))) * (1.0 + s * eta * complex(u.derivative(eta)))

    def tangent(eta, s):
        return -eta * complex(u.value(eta)) / (1.0 + s * eta * complex(u.derivative(eta)))

    return RootTracker(residual, jacobian, lambda eta: contains(DomainKind.DISK, eta), tangent=tangent,
                       step_guard=step_guard, options=options)


def eta_t(data, t, z, tol=1e-13, min_step=1e-10, initial_step=0.1, **tracking_kw):
    """
    eta_{mu_t}(z): the root of eta exp(t u(eta)) = z continued from eta_0 = id

    Raises
    ------
    NoSolutionError
        The continuation reached the unit circle.
    """
    t = _check_time(t)
    z = as_point(z)
    require_in_domain(DomainKind.DISK, z)
    if t == 0:
        return z
    options = TrackingOptions(tol=tol, min_step=min_step, initial_step=max(min(initial_step, t), min_step),
                              **tracking_kw)
    return _eta_tracker(data, z, options).track(z, t).value


class MultiplicativeGenerator(Generator):
    """
    G(z) = i u(e^{iz}) on the upper half-plane

    A Pick function with vanishing angular residue; its resolvents are the maps
    J_t of :func:`mult_chain_J`.
    """
    name = 'mult_generator'
    domain = DomainKind.HALF_PLANE
    classification = Classification.PICK
    pick_alpha = 0.0

    def __init__(self, data):
        self.data = data

    def value(self, z):
        return _out(1j * np.asarray(self.data.u.value(np.exp(1j * np.asarray(z, dtype=complex)))))

    def derivative(self, z):
        zeta = np.exp(1j * np.asarray(z, dtype=complex))
        return _out(-np.asarray(self.data.u.derivative(zeta)) * zeta)

    def to_dict(self):
        return {'kind': 'mult', **self.data.to_dict()}


def mult_generator(data):
    return MultiplicativeGenerator(data)


def mult_chain_J(data, t, z, tol=1e-13, min_step=1e-10, initial_step=0.1, **tracking_kw):
    """
    J_t(z) = -i log eta_t(e^{iz}) with the logarithm continued in t from J_0 = id

    Each accepted continuation step may turn eta by less than pi/2, so the
    accumulated argument is unambiguous. The result is checked against the
    resolvent identity z = J - t G(J) for G = :func:`mult_generator`.

    Raises
    ------
    NoSolutionError
        The tracked branch collapsed.
    NumericalError
        The resolvent identity fails by more than 1e-8.
    """
    t = _check_time(t)
    z = as_point(z)
    require_in_domain(DomainKind.HALF_PLANE, z)
    if t == 0:
        return z
    zeta = cmath.exp(1j * z)
    options = TrackingOptions(tol=tol, min_step=min_step, initial_step=max(min(initial_step, t), min_step),
                              **tracking_kw)

    def guard(old, new):
        return abs(cmath.phase(new / old)) < BRANCH_STEP

    track = _eta_tracker(data, zeta, options, step_guard=guard).track(zeta, t)
    path = track.z_path
    theta = z.real + sum(cmath.phase(b / a) for a, b in zip(path, path[1:]))
    J = complex(theta, -math.log(abs(track.value)))
    residual = abs(J - t * complex(MultiplicativeGenerator(data).value(J)) - z)
    if residual > IDENTITY_TOL * max(1.0, abs(z)):
        raise NumericalError('resolvent identity fails by {:.3g} at z={}'.format(residual, z))
    return J
