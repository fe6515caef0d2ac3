"""Canonical domains: unit disk, upper half-plane and the strip |Im z| < pi/2.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from resolventlab.utils.errors import ArgumentError, DomainError

HALF_PI = 0.5 * math.pi


class DomainKind(Enum):
    DISK = 'disk'
    HALF_PLANE = 'half_plane'
    STRIP = 'strip'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ArgumentError('unknown domain {!r}; expected one of {}'.format(
                value, [kind.value for kind in cls]))


def as_point(z):
    """Validate a complex coordinate: finite real and imaginary parts."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ArgumentError('non-finite point {}'.format(z))
    return z


def contains(kind, z):
    """
    Strict-interior membership test

    Parameters
    ----------
    kind : DomainKind
        Domain tag.
    z : complex or numpy.ndarray
        Point(s).

    Returns
    -------
    inside : bool or numpy.ndarray of bool
        ``True`` where ``z`` lies in the open domain. Non-finite values are outside.
    """
    z = np.asarray(z, dtype=complex)
    finite = np.isfinite(z)
    if kind is DomainKind.DISK:
        inside = np.abs(z) < 1.0
    elif kind is DomainKind.HALF_PLANE:
        inside = z.imag > 0.0
    elif kind is DomainKind.STRIP:
        inside = np.abs(z.imag) < HALF_PI
    else:
        raise ArgumentError('unknown domain {!r}'.format(kind))
    inside = inside & finite
    return bool(inside) if inside.ndim == 0 else inside


def require_in_domain(kind, z, what='point'):
    """Raise :class:`DomainError` unless every ``z`` lies in the open domain."""
    if not np.all(contains(kind, z)):
        raise DomainError('{} {} is outside the {} domain'.format(what, z, kind.value))


def boundary_distance(kind, z):
    """Euclidean distance from ``z`` to the boundary of the domain."""
    z = np.asarray(z, dtype=complex)
    if kind is DomainKind.DISK:
        d = 1.0 - np.abs(z)
    elif kind is DomainKind.HALF_PLANE:
        d = z.imag
    else:
        d = HALF_PI - np.abs(z.imag)
    return float(d) if np.ndim(d) == 0 else d


def sample_points(kind, n, seed=0):
    """
    Seeded sample points spread over a bounded part of the domain

    Parameters
    ----------
    kind : DomainKind
        Domain tag.
    n : int
        Number of points.
    seed : int
        Seed for ``numpy.random.default_rng``.

    Returns
    -------
    points : numpy.ndarray
        Complex array of shape ``(n,)``, strictly inside the domain.
    """
    rng = np.random.default_rng(seed)
    u, v = rng.uniform(size=n), rng.uniform(size=n)
    if kind is DomainKind.DISK:
        return 0.95 * np.sqrt(u) * np.exp(2j * np.pi * v)
    if kind is DomainKind.HALF_PLANE:
        return (-3.0 + 6.0 * u) + 1j * 10.0 ** (-1.0 + 1.5 * v)
    return (-5.0 + 10.0 * u) + 1j * 0.95 * HALF_PI * (2.0 * v - 1.0)


def radial_grid(grid_n, r_max):
    """Angles x radii grid of the unit disk, ``grid_n**2`` points, radii ``r_max*k/grid_n``."""
    angles = 2.0 * np.pi * np.arange(grid_n) / grid_n
    radii = r_max * np.arange(1, grid_n + 1) / grid_n
    return (radii[None, :] * np.exp(1j * angles)[:, None]).ravel()


@dataclass(frozen=True)
class DiskRegion:
    """Euclidean disk |z - center| < radius."""
    center: complex
    radius: float
    hyperbolic_radius: float = None

    def __post_init__(self):
        if not self.radius > 0:
            raise ArgumentError('radius must be positive, got {}'.format(self.radius))

    def contains(self, z):
        inside = np.abs(np.asarray(z, dtype=complex) - self.center) < self.radius
        return bool(inside) if inside.ndim == 0 else inside


def hyperbolic_disk(tau, rho):
    """
    Hyperbolic disk {z : |(z - tau)/(1 - conj(tau) z)| < rho} as a Euclidean disk

    Parameters
    ----------
    tau : complex
        Center, |tau| < 1.
    rho : float
        Pseudo-hyperbolic radius, 0 < rho < 1.

    Returns
    -------
    region : DiskRegion
        Center ``(1-rho^2) tau / (1-rho^2|tau|^2)``, radius ``(1-|tau|^2) rho / (1-rho^2|tau|^2)``.
    """
    tau = as_point(tau)
    if not abs(tau) < 1.0:
        raise ArgumentError('hyperbolic disk needs |tau| < 1, got {}'.format(tau))
    if not 0.0 < rho < 1.0:
        raise ArgumentError('hyperbolic disk needs 0 < rho < 1, got {}'.format(rho))
    denom = 1.0 - rho ** 2 * abs(tau) ** 2
    return DiskRegion(center=(1.0 - rho ** 2) * tau / denom,
                      radius=(1.0 - abs(tau) ** 2) * rho / denom,
                      hyperbolic_radius=0.5 * math.log((1.0 + rho) / (1.0 - rho)))


def horocycle(tau, R):
    """Horocycle {z : |z - tau|^2 / (1 - |z|^2) < R} at |tau| = 1: center tau/(1+R), radius R/(1+R)."""
    tau = as_point(tau)
    if abs(abs(tau) - 1.0) > 1e-12:
        raise ArgumentError('horocycle needs |tau| = 1, got {}'.format(tau))
    if not R > 0:
        raise ArgumentError('horocycle needs R > 0, got {}'.format(R))
    return DiskRegion(center=tau / (1.0 + R), radius=R / (1.0 + R))
