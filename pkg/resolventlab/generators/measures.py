"""Finite non-negative measures on the real line or the unit circle.

A measure is a list of atoms plus a quadrature rule for an (optional) density,
so every integral against it is a finite weighted sum.
"""

import math

import numpy as np

from resolventlab.utils.errors import ArgumentError

REAL = 'real'
CIRCLE = 'circle'
TWO_PI = 2.0 * math.pi


def gauss_legendre(interval, n_nodes):
    """Gauss-Legendre nodes and weights mapped to ``[a, b]``."""
    a, b = float(interval[0]), float(interval[1])
    if not b > a:
        raise ArgumentError('density support [{}, {}] is empty'.format(a, b))
    nodes, weights = np.polynomial.legendre.leggauss(int(n_nodes))
    half = 0.5 * (b - a)
    return a + half * (nodes + 1.0), half * weights


def circle_midpoints(n_nodes):
    """Midpoint rule on angles [0, 2pi)."""
    n_nodes = int(n_nodes)
    return TWO_PI * (np.arange(n_nodes) + 0.5) / n_nodes, np.full(n_nodes, TWO_PI / n_nodes)


class FiniteMeasure:
    """
    Atoms plus quadrature-sampled density

    Parameters
    ----------
    atoms : sequence of (location, weight)
        Point masses; locations are reals for ``support='real'`` and angles for ``'circle'``.
    nodes, node_weights : array_like
        Quadrature nodes and weights of the density part (weights already include the density).
    support : str
        ``'real'`` or ``'circle'``.
    interval : tuple or None
        Declared support of the density part.
    """

    def __init__(self, atoms=(), nodes=(), node_weights=(), support=REAL, interval=None):
        if support not in (REAL, CIRCLE):
            raise ArgumentError('unknown measure support {!r}'.format(support))
        self.support = support
        atoms = [(float(x), float(w)) for x, w in atoms]
        self.atom_locations = np.array([x for x, _ in atoms], dtype=float)
        self.atom_weights = np.array([w for _, w in atoms], dtype=float)
        self.nodes = np.asarray(nodes, dtype=float)
        self.node_weights = np.asarray(node_weights, dtype=float)
        self.interval = None if interval is None else (float(interval[0]), float(interval[1]))
        self._validate()

    def _validate(self):
        if self.nodes.shape != self.node_weights.shape:
            raise ArgumentError('quadrature nodes and weights differ in length')
        for name, values in (('atom location', self.atom_locations), ('atom weight', self.atom_weights),
                             ('node', self.nodes), ('node weight', self.node_weights)):
            if not np.all(np.isfinite(values)):
                raise ArgumentError('non-finite {} in measure'.format(name))
        if np.any(self.atom_weights < 0) or np.any(self.node_weights < 0):
            raise ArgumentError('measure weights must be non-negative')
        if self.nodes.size and self.interval is not None:
            a, b = self.interval
            if np.any(self.nodes <= a) or np.any(self.nodes >= b):
                raise ArgumentError('quadrature nodes must lie strictly inside [{}, {}]'.format(a, b))

    @classmethod
    def zero(cls, support=REAL):
        return cls(support=support)

    @classmethod
    def dirac(cls, location, weight=1.0, support=REAL):
        return cls(atoms=[(location, weight)], support=support)

    @classmethod
    def from_density(cls, density, interval=None, n_nodes=64, support=REAL, atoms=()):
        """
        Quadrature realization of an absolutely continuous part

        Parameters
        ----------
        density : callable
            Non-negative density (vectorized), in the location variable.
        interval : tuple
            Compact support ``[a, b]`` on the line, or an angle range on the circle
            (default the full circle).
        n_nodes : int
            Gauss-Legendre nodes (line) or midpoint nodes (circle).
        """
        if support == REAL:
            if interval is None:
                raise ArgumentError('a density on the line needs a compact support')
            nodes, weights = gauss_legendre(interval, n_nodes)
        elif interval is None or tuple(interval) == (0.0, TWO_PI):
            nodes, weights = circle_midpoints(n_nodes)
            interval = (0.0, TWO_PI)
        else:
            a, b = float(interval[0]), float(interval[1])
            nodes = a + (b - a) * (np.arange(int(n_nodes)) + 0.5) / int(n_nodes)
            weights = np.full(int(n_nodes), (b - a) / int(n_nodes))
        values = np.asarray(density(nodes), dtype=float)
        if np.any(values < 0) or not np.all(np.isfinite(values)):
            raise ArgumentError('density must be finite and non-negative at the quadrature nodes')
        return cls(atoms=atoms, nodes=nodes, node_weights=weights * values, support=support,
                   interval=interval)

    @classmethod
    def from_samples(cls, values, interval, n_nodes=64, support=REAL, atoms=()):
        """Density given by equispaced samples on ``interval`` (end points included), linearly interpolated."""
        values = np.asarray(values, dtype=float)
        if values.ndim != 1 or values.size < 2:
            raise ArgumentError('density needs at least two samples')
        grid = np.linspace(float(interval[0]), float(interval[1]), values.size)
        return cls.from_density(lambda x: np.interp(x, grid, values), interval, n_nodes, support, atoms)

    @property
    def locations(self):
        return np.concatenate([self.atom_locations, self.nodes])

    @property
    def weights(self):
        return np.concatenate([self.atom_weights, self.node_weights])

    @property
    def points(self):
        """Locations as complex points (e^{i theta} on the circle)."""
        if self.support == CIRCLE:
            return np.exp(1j * self.locations)
        return self.locations.astype(complex)

    @property
    def total_mass(self):
        return float(np.sum(self.atom_weights) + np.sum(self.node_weights))

    def is_zero(self):
        return self.total_mass == 0.0

    def integrate(self, kernel, z):
        """
        Integrate ``kernel(z, x)`` against the measure

        Parameters
        ----------
        kernel : callable
            Broadcasting kernel of the evaluation points and the measure points.
        z : complex or numpy.ndarray
            Evaluation point(s).

        Returns
        -------
        integral : complex or numpy.ndarray
            Same shape as ``z``.
        """
        z = np.asarray(z, dtype=complex)
        if self.is_zero():
            return np.zeros(z.shape, dtype=complex)
        x, w = self.points, self.weights
        return np.sum(w * kernel(z[..., None], x), axis=-1)

    def __add__(self, other):
        if self.support != other.support:
            raise ArgumentError('cannot add measures on different supports')
        intervals = [m.interval for m in (self, other) if m.nodes.size]
        interval = None
        if intervals:
            interval = (min(a for a, _ in intervals), max(b for _, b in intervals))
        atoms = list(zip(self.atom_locations, self.atom_weights)) + \
            list(zip(other.atom_locations, other.atom_weights))
        return FiniteMeasure(atoms=atoms,
                             nodes=np.concatenate([self.nodes, other.nodes]),
                             node_weights=np.concatenate([self.node_weights, other.node_weights]),
                             support=self.support, interval=interval)

    def scaled(self, factor):
        if factor < 0:
            raise ArgumentError('measures scale by non-negative factors only')
        return FiniteMeasure(atoms=list(zip(self.atom_locations, factor * self.atom_weights)),
                             nodes=self.nodes, node_weights=factor * self.node_weights,
                             support=self.support, interval=self.interval)

    def to_dict(self):
        data = {'atoms': [[float(x), float(w)] for x, w in zip(self.atom_locations, self.atom_weights)]}
        if self.nodes.size:
            data['quadrature'] = {'support': list(self.interval) if self.interval else None,
                                  'nodes': self.nodes.tolist(), 'weights': self.node_weights.tolist()}
        return data

    def __repr__(self):
        return 'FiniteMeasure({}, atoms={}, nodes={}, mass={:.6g})'.format(
            self.support, self.atom_locations.size, self.nodes.size, self.total_mass)
