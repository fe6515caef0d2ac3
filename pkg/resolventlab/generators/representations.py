"""Integral representations of Pick functions on the half-plane and of
Caratheodory-type functions on the disk.
"""

from dataclasses import dataclass, field

import numpy as np

from resolventlab.domains.domains import DomainKind, require_in_domain
from resolventlab.generators.measures import CIRCLE, REAL, FiniteMeasure
from resolventlab.utils.errors import ArgumentError


def _nevanlinna_kernel(z, x):
    return (1.0 + x * z) / (x - z)


def _nevanlinna_kernel_deriv(z, x):
    return (x * x + 1.0) / (x - z) ** 2


def _herglotz_kernel(z, x):
    return (1.0 + z * x) / (1.0 - z * x)


def _herglotz_kernel_deriv(z, x):
    return 2.0 * x / (1.0 - z * x) ** 2


def _scalar(value):
    value = np.asarray(value)
    return complex(value) if value.ndim == 0 else value


@dataclass(frozen=True)
class NevanlinnaTriple:
    """q(z) = alpha z + beta + int (1 + x z)/(x - z) rho(dx), alpha >= 0."""
    alpha: float = 0.0
    beta: float = 0.0
    rho: FiniteMeasure = field(default_factory=FiniteMeasure.zero)

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and np.isfinite(self.beta)):
            raise ArgumentError('non-finite Nevanlinna coefficients')
        if self.alpha < 0:
            raise ArgumentError('alpha must be non-negative, got {}'.format(self.alpha))
        if self.rho.support != REAL:
            raise ArgumentError('the Nevanlinna measure lives on the real line')

    def value(self, z):
        z = np.asarray(z, dtype=complex)
        return _scalar(self.alpha * z + self.beta + self.rho.integrate(_nevanlinna_kernel, z))

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        return _scalar(self.alpha + self.rho.integrate(_nevanlinna_kernel_deriv, z))

    def to_dict(self):
        return dict(alpha=float(self.alpha), beta=float(self.beta), **self.rho.to_dict())


@dataclass(frozen=True)
class HerglotzData:
    """u(z) = -i c + int (1 + z x)/(1 - z x) rho(dx) over the unit circle, c = ``imag_const``."""
    imag_const: float = 0.0
    rho: FiniteMeasure = field(default_factory=lambda: FiniteMeasure.zero(CIRCLE))

    def __post_init__(self):
        if not np.isfinite(self.imag_const):
            raise ArgumentError('non-finite imaginary constant')
        if self.rho.support != CIRCLE:
            raise ArgumentError('the Herglotz measure lives on the unit circle')

    def is_zero(self):
        return self.imag_const == 0.0 and self.rho.is_zero()

    def value(self, z):
        z = np.asarray(z, dtype=complex)
        return _scalar(-1j * self.imag_const + self.rho.integrate(_herglotz_kernel, z))

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        return _scalar(self.rho.integrate(_herglotz_kernel_deriv, z))

    def to_dict(self):
        return dict(imag_const=float(self.imag_const), **self.rho.to_dict())


def nevanlinna_eval(q, z):
    """
    Evaluate a Pick function from its Nevanlinna triple

    Parameters
    ----------
    q : NevanlinnaTriple
        Representation data.
    z : complex or numpy.ndarray
        Point(s) of the upper half-plane.

    Returns
    -------
    value : complex or numpy.ndarray
        q(z), with non-negative imaginary part.
    """
    require_in_domain(DomainKind.HALF_PLANE, z)
    return q.value(z)


def herglotz_eval(u, zeta):
    """u(zeta) for |zeta| < 1; the result has non-negative real part."""
    require_in_domain(DomainKind.DISK, zeta)
    return u.value(zeta)
