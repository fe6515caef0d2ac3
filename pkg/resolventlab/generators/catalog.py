"""Closed-form generator catalog with analytic derivatives and, where known, semigroups.
"""

import numpy as np

from resolventlab.domains.domains import DomainKind
from resolventlab.generators.base import Classification, Generator, _default_classification
from resolventlab.utils.errors import ArgumentError


def upper_sqrt(a):
    """Square root with non-negative imaginary part."""
    root = np.sqrt(np.asarray(a, dtype=complex))
    root = np.where(root.imag < 0, -root, root)
    return complex(root) if root.ndim == 0 else root


def _out(value):
    return complex(value) if np.ndim(value) == 0 else value


def _complex_param(value):
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ArgumentError('complex parameters are [re, im] pairs, got {}'.format(value))
        return complex(value[0], value[1])
    return complex(value)


class CatalogGenerator(Generator):
    """Base of catalog entries; ``params`` round-trips through JSON."""
    params = {}

    def to_dict(self):
        params = {}
        for key, value in self.params.items():
            params[key] = [value.real, value.imag] if isinstance(value, complex) else value
        return {'kind': 'catalog', 'name': self.name, 'params': params}

    def __repr__(self):
        if not self.params:
            return self.name
        return '{}({})'.format(self.name, ', '.join('{}={}'.format(k, v) for k, v in self.params.items()))


class Zero(CatalogGenerator):
    name = 'zero'

    def __init__(self, domain='disk'):
        self.domain = DomainKind.parse(domain)
        self.params = {'domain': self.domain.value}
        self.classification = _default_classification(self.domain)
        if self.domain is DomainKind.HALF_PLANE:
            self.pick_alpha = 0.0
        if self.domain is DomainKind.STRIP:
            self.strip_c = 0.0

    def value(self, z):
        return _out(np.zeros(np.shape(z), dtype=complex))

    def derivative(self, z):
        return self.value(z)

    def flow(self, t, w):
        return w


class DiskMinusZ(CatalogGenerator):
    """G(z) = -z, semigroup e^{-t} z."""
    name = 'disk_minus_z'
    domain = DomainKind.DISK
    classification = Classification.BOUNDED
    tau = 0j

    def value(self, z):
        return _out(-np.asarray(z, dtype=complex))

    def derivative(self, z):
        return _out(-np.ones(np.shape(z), dtype=complex))

    def flow(self, t, w):
        return _out(np.exp(-t) * np.asarray(w, dtype=complex))


class DiskHyperbolic(CatalogGenerator):
    """
    Rotated hyperbolic generator G(z) = -z (1 + a z)/(1 - a z), a = e^{i angle}

    ``variant='G1'`` is angle 0 and ``variant='G2'`` is angle pi.
    """
    name = 'disk_hyperbolic'
    domain = DomainKind.DISK
    classification = Classification.BOUNDED
    tau = 0j

    def __init__(self, variant=None, angle=None):
        if variant is not None and angle is not None:
            raise ArgumentError('give either variant or angle, not both')
        if angle is None:
            variant = variant or 'G1'
            if variant not in ('G1', 'G2'):
                raise ArgumentError('disk_hyperbolic variant is G1 or G2, got {!r}'.format(variant))
            self.a = 1.0 + 0j if variant == 'G1' else -1.0 + 0j
            self.params = {'variant': variant}
        else:
            self.a = complex(np.exp(1j * float(angle)))
            self.params = {'angle': float(angle)}

    def value(self, z):
        z = np.asarray(z, dtype=complex)
        return _out(-z * (1.0 + self.a * z) / (1.0 - self.a * z))

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        az = self.a * z
        return _out(-(1.0 + 2.0 * az - az * az) / (1.0 - az) ** 2)


class DiskParabolic(CatalogGenerator):
    """H(z) = (1 - z^2)/2 with boundary Denjoy-Wolff point 1."""
    name = 'disk_parabolic'
    domain = DomainKind.DISK
    classification = Classification.BOUNDED
    tau = 1 + 0j

    def value(self, z):
        z = np.asarray(z, dtype=complex)
        return _out(0.5 * (1.0 - z * z))

    def derivative(self, z):
        return _out(-np.asarray(z, dtype=complex))

    def flow(self, t, w):
        w = np.asarray(w, dtype=complex)
        T = np.tanh(0.5 * t)
        return _out((w + T) / (1.0 + w * T))


class HalfPlaneZ(CatalogGenerator):
    """G(z) = z on the half-plane, semigroup e^{t} z, resolvent w/(1-t)."""
    name = 'halfplane_z'
    domain = DomainKind.HALF_PLANE
    classification = Classification.PICK
    pick_alpha = 1.0

    def value(self, z):
        return _out(np.asarray(z, dtype=complex))

    def derivative(self, z):
        return _out(np.ones(np.shape(z), dtype=complex))

    def flow(self, t, w):
        return _out(np.exp(t) * np.asarray(w, dtype=complex))


class HalfPlaneQuadratic(CatalogGenerator):
    """G(z) = (i/2)(z^2 + 1), the Cayley conjugate of -z, Denjoy-Wolff point i."""
    name = 'halfplane_quadratic'
    domain = DomainKind.HALF_PLANE
    classification = Classification.FINITE_DW
    tau = 1j

    def value(self, z):
        z = np.asarray(z, dtype=complex)
        return _out(0.5j * (z * z + 1.0))

    def derivative(self, z):
        return _out(1j * np.asarray(z, dtype=complex))

    def flow(self, t, w):
        w = np.asarray(w, dtype=complex)
        zeta = np.exp(-t) * (w - 1j) / (w + 1j)
        return _out(1j * (1.0 + zeta) / (1.0 - zeta))


class HalfPlaneNegInvZ(CatalogGenerator):
    """G(z) = -1/z, the Pick generator of the standard semicircle semigroup."""
    name = 'halfplane_neg_inv_z'
    domain = DomainKind.HALF_PLANE
    classification = Classification.PICK
    pick_alpha = 0.0

    def value(self, z):
        return _out(-1.0 / np.asarray(z, dtype=complex))

    def derivative(self, z):
        return _out(1.0 / np.asarray(z, dtype=complex) ** 2)

    def flow(self, t, w):
        w = np.asarray(w, dtype=complex)
        return upper_sqrt(w * w - 2.0 * t)


class StripConst(CatalogGenerator):
    """G = c >= 0 on the strip, semigroup w + c t."""
    name = 'strip_const'
    domain = DomainKind.STRIP
    classification = Classification.STRIP_INFINITY
    strip_c = 0.0

    def __init__(self, c=1.0):
        c = float(c)
        if c < 0:
            raise ArgumentError('strip_const needs c >= 0, got {}'.format(c))
        self.c = c
        self.params = {'c': c}

    def value(self, z):
        return _out(np.full(np.shape(z), self.c, dtype=complex))

    def derivative(self, z):
        return _out(np.zeros(np.shape(z), dtype=complex))

    def flow(self, t, w):
        return _out(np.asarray(w, dtype=complex) + self.c * t)


class StripExp(CatalogGenerator):
    """G(z) = e^{-z} q, Re q >= 0; semigroup log(e^w + q t)."""
    name = 'strip_exp'
    domain = DomainKind.STRIP
    classification = Classification.STRIP_INFINITY
    strip_c = 0.0

    def __init__(self, q=1 + 1j):
        q = _complex_param(q)
        if q.real < 0:
            raise ArgumentError('strip_exp needs Re q >= 0, got {}'.format(q))
        self.q = q
        self.params = {'q': q}

    def value(self, z):
        return _out(np.exp(-np.asarray(z, dtype=complex)) * self.q)

    def derivative(self, z):
        return _out(-np.exp(-np.asarray(z, dtype=complex)) * self.q)

    def flow(self, t, w):
        return _out(np.log(np.exp(np.asarray(w, dtype=complex)) + self.q * t))


CATALOG = {
    'zero': Zero,
    'disk_minus_z': DiskMinusZ,
    'disk_hyperbolic': DiskHyperbolic,
    'disk_rotation_hyperbolic': lambda angle=0.0: DiskHyperbolic(angle=angle),
    'disk_parabolic': DiskParabolic,
    'halfplane_z': HalfPlaneZ,
    'halfplane_quadratic': HalfPlaneQuadratic,
    'halfplane_neg_inv_z': HalfPlaneNegInvZ,
    'strip_const': StripConst,
    'strip_exp': StripExp,
}


def catalog(name, **params):
    """
    Instantiate a catalog generator

    Parameters
    ----------
    name : str
        Key of :data:`CATALOG`.
    params :
        Entry parameters (``domain`` for zero, ``variant``/``angle`` for the hyperbolic family,
        ``c`` for strip_const, ``q`` for strip_exp).

    Returns
    -------
    generator : CatalogGenerator
    """
    if name not in CATALOG:
        raise ArgumentError('unknown catalog generator {!r}; known: {}'.format(name, sorted(CATALOG)))
    try:
        return CATALOG[name](**params)
    except TypeError as err:
        raise ArgumentError('bad parameters for {}: {}'.format(name, err)) from err
