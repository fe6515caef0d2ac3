"""Catalog biholomorphisms between the canonical domains and conjugation along them.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from resolventlab.domains.domains import DomainKind, require_in_domain
from resolventlab.generators.base import Classification, Generator
from resolventlab.utils.errors import ArgumentError, DomainError


def _out(value):
    return complex(value) if np.ndim(value) == 0 else value


def _guard_pole(denominator, what):
    if np.any(denominator == 0):
        raise DomainError('{} has a pole at the given point'.format(what))


def cayley(z):
    """C(z) = (z - i)/(z + i), upper half-plane onto the disk."""
    z = np.asarray(z, dtype=complex)
    _guard_pole(z + 1j, 'cayley')
    return _out((z - 1j) / (z + 1j))


def cayley_deriv(z):
    z = np.asarray(z, dtype=complex)
    return _out(2j / (z + 1j) ** 2)


def cayley_deriv2(z):
    z = np.asarray(z, dtype=complex)
    return _out(-4j / (z + 1j) ** 3)


def cayley_inv(w):
    """C^{-1}(w) = i(1 + w)/(1 - w)."""
    w = np.asarray(w, dtype=complex)
    _guard_pole(1.0 - w, 'cayley_inv')
    return _out(1j * (1.0 + w) / (1.0 - w))


def cayley_inv_deriv(w):
    w = np.asarray(w, dtype=complex)
    return _out(2j / (1.0 - w) ** 2)


def cayley_inv_deriv2(w):
    w = np.asarray(w, dtype=complex)
    return _out(4j / (1.0 - w) ** 3)


def strip_map(zeta):
    """phi(zeta) = log((1 + zeta)/(1 - zeta)), disk onto the strip |Im z| < pi/2 (principal branch)."""
    require_in_domain(DomainKind.DISK, zeta)
    zeta = np.asarray(zeta, dtype=complex)
    return _out(np.log((1.0 + zeta) / (1.0 - zeta)))


def strip_map_deriv(zeta):
    zeta = np.asarray(zeta, dtype=complex)
    return _out(2.0 / (1.0 - zeta * zeta))


def strip_map_deriv2(zeta):
    zeta = np.asarray(zeta, dtype=complex)
    return _out(4.0 * zeta / (1.0 - zeta * zeta) ** 2)


def strip_map_inv(z):
    """tanh(z/2), the strip onto the disk."""
    require_in_domain(DomainKind.STRIP, z)
    return _out(np.tanh(0.5 * np.asarray(z, dtype=complex)))


def strip_map_inv_deriv(z):
    t = np.tanh(0.5 * np.asarray(z, dtype=complex))
    return _out(0.5 * (1.0 - t * t))


def strip_map_inv_deriv2(z):
    t = np.tanh(0.5 * np.asarray(z, dtype=complex))
    return _out(-0.5 * t * (1.0 - t * t))


@dataclass(frozen=True)
class ConformalMap:
    """
    Biholomorphism ``source -> target`` with first and second derivatives and inverse

    ``infinity_image`` is the target boundary point that the source's point at
    (+)infinity goes to; ``infinity_preimage`` is the source boundary point sent to
    the target's (+)infinity. Both transport Denjoy-Wolff data.
    """
    name: str
    source: DomainKind
    target: DomainKind
    forward: Callable
    derivative: Callable
    derivative2: Callable
    inverse: Callable
    infinity_image: complex = None
    infinity_preimage: complex = None

    def __call__(self, z):
        return self.forward(z)


CAYLEY = ConformalMap('cayley', DomainKind.HALF_PLANE, DomainKind.DISK,
                      cayley, cayley_deriv, cayley_deriv2, cayley_inv, infinity_image=1 + 0j)
CAYLEY_INV = ConformalMap('cayley_inv', DomainKind.DISK, DomainKind.HALF_PLANE,
                          cayley_inv, cayley_inv_deriv, cayley_inv_deriv2, cayley, infinity_preimage=1 + 0j)
STRIP_MAP = ConformalMap('strip_map', DomainKind.DISK, DomainKind.STRIP,
                         strip_map, strip_map_deriv, strip_map_deriv2, strip_map_inv, infinity_preimage=1 + 0j)
STRIP_MAP_INV = ConformalMap('strip_map_inv', DomainKind.STRIP, DomainKind.DISK,
                             strip_map_inv, strip_map_inv_deriv, strip_map_inv_deriv2, strip_map,
                             infinity_image=1 + 0j)


def identity(kind):
    kind = DomainKind.parse(kind)
    return affine(1.0, 0.0, kind)


class _Affine:
    """Picklable z -> a z + b."""

    def __init__(self, a, b):
        self.a, self.b = a, b

    def __call__(self, z):
        return _out(self.a * np.asarray(z, dtype=complex) + self.b)


class _Constant:

    def __init__(self, value):
        self.value = value

    def __call__(self, z):
        return _out(np.full(np.shape(z), self.value, dtype=complex))


def affine(a, b, kind):
    """
    Affine self-map z -> a z + b of a canonical domain

    The half-plane admits a > 0 and real b, the strip a = 1 and real b; the disk only the identity.
    """
    kind = DomainKind.parse(kind)
    a, b = float(a), float(b)
    if kind is DomainKind.HALF_PLANE and not a > 0:
        raise ArgumentError('affine maps of the half-plane need a > 0')
    if kind is DomainKind.STRIP and a != 1.0:
        raise ArgumentError('affine maps of the strip are translations (a = 1)')
    if kind is DomainKind.DISK and (a != 1.0 or b != 0.0):
        raise ArgumentError('the only affine self-map of the disk here is the identity')
    name = 'identity' if (a, b) == (1.0, 0.0) else 'affine'
    return ConformalMap(name, kind, kind, _Affine(a, b), _Constant(a), _Constant(0.0), _Affine(1.0 / a, -b / a))


class ConjugatedGenerator(Generator):
    """
    Generator z -> G(phi(z)) / phi'(z) on the source domain of ``phi``

    Parameters
    ----------
    G : Generator
        Generator on ``phi.target``.
    phi : ConformalMap
        Biholomorphism from the new domain onto G's domain.
    """
    name = 'conjugated'

    def __init__(self, G, phi):
        if phi.target is not G.domain:
            raise ArgumentError('map {} lands in {}, generator lives on {}'.format(
                phi.name, phi.target.value, G.domain.value))
        self.G = G
        self.phi = phi
        self.domain = phi.source
        self._transport_metadata()

    def _transport_metadata(self):
        G, phi = self.G, self.phi
        same_kind = G.domain is self.domain
        target_at_infinity = G.tau is None and G.classification in (Classification.PICK,
                                                                   Classification.STRIP_INFINITY)
        source_at_infinity = same_kind and target_at_infinity
        if target_at_infinity and phi.infinity_preimage is not None:
            self.tau = phi.infinity_preimage
        elif G.tau is not None:
            if phi.infinity_image is not None and abs(G.tau - phi.infinity_image) < 1e-14:
                source_at_infinity = True
            else:
                try:
                    self.tau = complex(phi.inverse(G.tau))
                except DomainError:
                    self.tau = None
        if self.domain is DomainKind.DISK:
            self.classification = Classification.BOUNDED
        elif self.domain is DomainKind.HALF_PLANE:
            if source_at_infinity:
                self.classification = Classification.PICK
                if same_kind:
                    self.pick_alpha = G.pick_alpha
            elif self.tau is not None:
                self.classification = Classification.FINITE_DW
        elif source_at_infinity:
            self.classification = Classification.STRIP_INFINITY

    def value(self, z):
        z = np.asarray(z, dtype=complex)
        return _out(np.asarray(self.G.value(self.phi.forward(z))) / np.asarray(self.phi.derivative(z)))

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        w = self.phi.forward(z)
        d1 = np.asarray(self.phi.derivative(z))
        d2 = np.asarray(self.phi.derivative2(z))
        return _out(np.asarray(self.G.derivative(w)) - np.asarray(self.G.value(w)) * d2 / d1 ** 2)

    def flow(self, t, w):
        return self.phi.inverse(self.G.flow(t, self.phi.forward(w)))

    def __repr__(self):
        return 'conjugate({!r}, {})'.format(self.G, self.phi.name)


def conjugate_generator(G, phi):
    """
    Conjugate a generator along a catalog biholomorphism

    Parameters
    ----------
    G : Generator
        Generator on ``phi.target``.
    phi : ConformalMap
        Map from the new domain onto G's domain.

    Returns
    -------
    generator : Generator
        ``z -> G(phi(z)) / phi'(z)``; the identity map returns ``G`` itself.
    """
    if phi.name == 'identity' and phi.source is G.domain:
        return G
    return ConjugatedGenerator(G, phi)


def conjugate_self_map(f, phi):
    """
    Transport a self-map ``f`` of ``phi.target`` to ``phi.source``: phi^{-1} o f o phi

    Parameters
    ----------
    f : callable
        Self-map of the target domain.
    phi : ConformalMap

    Returns
    -------
    conjugated : callable
    """
    inverse = phi.inverse

    def conjugated(z):
        return inverse(f(phi.forward(z)))
    return conjugated
