"""Probability measures on the line and on the circle, with closed forms where available.
"""

import math

import numpy as np

from resolventlab.generators.measures import CIRCLE, REAL, FiniteMeasure
from resolventlab.utils.errors import ArgumentError

MASS_TOL = 1e-12


class SemicircleLaw:
    """
    Closed-form transforms of the semicircle law W(m, sigma^2) on [m - 2 sigma, m + 2 sigma]

    The square root of z'^2 - 4 sigma^2 (z' = z - m) is sqrt(z' - 2 sigma) sqrt(z' + 2 sigma),
    the branch with G(iy) ~ 1/(iy) on the upper half-plane.
    """

    def __init__(self, mean=0.0, variance=1.0):
        if not variance > 0:
            raise ArgumentError('semicircle variance must be positive')
        self.mean = float(mean)
        self.variance = float(variance)
        self.sigma = math.sqrt(self.variance)

    def _root(self, z):
        shifted = np.asarray(z, dtype=complex) - self.mean
        return shifted, np.sqrt(shifted - 2.0 * self.sigma) * np.sqrt(shifted + 2.0 * self.sigma)

    def cauchy(self, z):
        # 2/(z' + root) equals (z' - root)/(2 sigma^2) without the cancellation at large |z|
        shifted, root = self._root(z)
        return 2.0 / (shifted + root)

    def cauchy_derivative(self, z):
        shifted, root = self._root(z)
        return -2.0 / (root * (shifted + root))

    def boundary_cauchy(self, x):
        """Limit of G(x + i eps) as eps -> 0+ for real x."""
        shifted = np.asarray(x, dtype=float) - self.mean
        gap = shifted ** 2 - 4.0 * self.variance
        inside = gap < 0
        root = np.where(inside, 1j * np.sqrt(np.abs(gap)), np.sign(shifted) * np.sqrt(np.abs(gap)))
        return (shifted - root) / (2.0 * self.variance)

    def density(self, x):
        shifted = np.asarray(x, dtype=float) - self.mean
        return np.sqrt(np.maximum(4.0 * self.variance - shifted ** 2, 0.0)) / (2.0 * math.pi * self.variance)

    def to_dict(self):
        return {'law': 'semicircle', 'mean': self.mean, 'variance': self.variance}


class RealMeasure:
    """
    Probability measure on the real line

    Parameters
    ----------
    measure : FiniteMeasure
        Atoms and quadrature with total mass 1.
    law : object or None
        Closed form providing ``cauchy``, ``cauchy_derivative`` and ``boundary_cauchy``.
    name : str
    """

    def __init__(self, measure, law=None, name='measure'):
        if measure.support != REAL:
            raise ArgumentError('RealMeasure needs a measure on the real line')
        if abs(measure.total_mass - 1.0) > MASS_TOL:
            raise ArgumentError('{} has mass {:.17g}, not 1'.format(name, measure.total_mass))
        self.measure = measure
        self.law = law
        self.name = name

    def cauchy(self, z):
        if self.law is not None:
            return self.law.cauchy(z)
        return self.measure.integrate(lambda z, x: 1.0 / (z - x), z)

    def cauchy_derivative(self, z):
        if self.law is not None:
            return self.law.cauchy_derivative(z)
        return self.measure.integrate(lambda z, x: -1.0 / (z - x) ** 2, z)

    def without_law(self):
        """The same measure evaluated through its quadrature only."""
        return RealMeasure(self.measure, None, self.name)

    def to_dict(self):
        if self.law is not None:
            return self.law.to_dict()
        return self.measure.to_dict()

    def __repr__(self):
        return 'RealMeasure({})'.format(self.name)


class CircleMeasure:
    """Probability measure on the unit circle; ``mean_nonzero`` flags the multiplicatively invertible ones."""

    def __init__(self, measure, name='circle_measure'):
        if measure.support != CIRCLE:
            raise ArgumentError('CircleMeasure needs a measure on the unit circle')
        if abs(measure.total_mass - 1.0) > MASS_TOL:
            raise ArgumentError('{} has mass {:.17g}, not 1'.format(name, measure.total_mass))
        self.measure = measure
        self.name = name

    @property
    def mean(self):
        return complex(np.sum(self.measure.weights * self.measure.points))

    @property
    def mean_nonzero(self):
        return abs(self.mean) > MASS_TOL

    def to_dict(self):
        return self.measure.to_dict()

    def __repr__(self):
        return 'CircleMeasure({})'.format(self.name)


def dirac(a=0.0):
    return RealMeasure(FiniteMeasure.dirac(a), name='dirac({:g})'.format(a))


def atomic(atoms):
    """Finite atomic probability measure from (location, weight) pairs."""
    return RealMeasure(FiniteMeasure(atoms=atoms), name='atomic')


def semicircle(mean=0.0, variance=1.0, n_nodes=64, closed_form=True):
    """
    Semicircle law with Gauss-Chebyshev (second kind) quadrature

    Nodes m + 2 sigma cos(k pi/(n+1)) with weights 2 sin^2(k pi/(n+1))/(n+1), k = 1..n.
    """
    law = SemicircleLaw(mean, variance)
    k = np.arange(1, int(n_nodes) + 1)
    theta = k * math.pi / (n_nodes + 1)
    nodes = law.mean + 2.0 * law.sigma * np.cos(theta)
    weights = 2.0 * np.sin(theta) ** 2 / (n_nodes + 1)
    measure = FiniteMeasure(nodes=nodes, node_weights=weights,
                            interval=(law.mean - 2.0 * law.sigma, law.mean + 2.0 * law.sigma))
    return RealMeasure(measure, law if closed_form else None,
                       name='semicircle({:g},{:g})'.format(law.mean, law.variance))


def uniform_circle(n_nodes=256):
    return CircleMeasure(FiniteMeasure.from_density(lambda theta: np.full(np.shape(theta), 1.0 / (2.0 * math.pi)),
                                                    n_nodes=n_nodes, support=CIRCLE), name='uniform')


def dirac_circle(angle=0.0):
    return CircleMeasure(FiniteMeasure.dirac(angle, support=CIRCLE), name='dirac_circle({:g})'.format(angle))
