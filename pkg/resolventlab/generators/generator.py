"""Generators built from representation data on the three canonical domains.
"""

import numpy as np

from resolventlab.domains.domains import DomainKind, as_point
from resolventlab.generators.base import Classification, Generator
from resolventlab.generators.representations import HerglotzData, NevanlinnaTriple
from resolventlab.utils.errors import ArgumentError


class BerksonPorta(Generator):
    """
    Disk generator G(z) = (tau - z)(1 - conj(tau) z) p(z)

    Parameters
    ----------
    tau : complex
        Denjoy-Wolff point, |tau| <= 1.
    p : HerglotzData
        Function with non-negative real part; ``p = 0`` gives the zero generator.
    """
    name = 'berkson_porta'
    domain = DomainKind.DISK
    classification = Classification.BOUNDED

    def __init__(self, tau, p):
        tau = as_point(tau)
        if abs(tau) > 1.0 + 1e-12:
            raise ArgumentError('Berkson-Porta point must satisfy |tau| <= 1, got {}'.format(tau))
        self.tau = tau
        self.p = p

    def value(self, z):
        z = np.asarray(z, dtype=complex)
        out = (self.tau - z) * (1.0 - np.conj(self.tau) * z) * self.p.value(z)
        return complex(out) if np.ndim(out) == 0 else out

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        tau_bar = np.conj(self.tau)
        factor = (self.tau - z) * (1.0 - tau_bar * z)
        factor_deriv = 2.0 * tau_bar * z - 1.0 - abs(self.tau) ** 2
        out = factor_deriv * self.p.value(z) + factor * self.p.derivative(z)
        return complex(out) if np.ndim(out) == 0 else out

    def to_dict(self):
        return {'kind': 'berkson_porta', 'tau': [self.tau.real, self.tau.imag], 'p': self.p.to_dict()}


class HalfPlanePick(Generator):
    """Half-plane generator with Denjoy-Wolff point at infinity: a Pick function q."""
    name = 'halfplane_pick'
    domain = DomainKind.HALF_PLANE
    classification = Classification.PICK

    def __init__(self, q):
        if not isinstance(q, NevanlinnaTriple):
            raise ArgumentError('HalfPlanePick needs a NevanlinnaTriple')
        self.q = q
        self.pick_alpha = float(q.alpha)

    def value(self, z):
        return self.q.value(z)

    def derivative(self, z):
        return self.q.derivative(z)

    def to_dict(self):
        return {'kind': 'halfplane_pick', 'triple': self.q.to_dict()}


class HalfPlaneInterior(Generator):
    """Half-plane generator G(z) = (z - sigma)(z - conj(sigma)) q(z), sigma in the closed half-plane."""
    name = 'halfplane_interior'
    domain = DomainKind.HALF_PLANE
    classification = Classification.FINITE_DW

    def __init__(self, sigma, q):
        sigma = as_point(sigma)
        if sigma.imag < 0:
            raise ArgumentError('sigma must lie in the closed upper half-plane, got {}'.format(sigma))
        self.tau = sigma
        self.q = q

    @property
    def sigma(self):
        return self.tau

    def value(self, z):
        z = np.asarray(z, dtype=complex)
        out = (z - self.sigma) * (z - np.conj(self.sigma)) * self.q.value(z)
        return complex(out) if np.ndim(out) == 0 else out

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        sigma, sigma_bar = self.sigma, np.conj(self.sigma)
        out = (2.0 * z - sigma - sigma_bar) * self.q.value(z) + (z - sigma) * (z - sigma_bar) * self.q.derivative(z)
        return complex(out) if np.ndim(out) == 0 else out

    def to_dict(self):
        return {'kind': 'halfplane_interior', 'sigma': [self.sigma.real, self.sigma.imag],
                'triple': self.q.to_dict()}


class StripForm(Generator):
    """
    Strip generator with Denjoy-Wolff point at +infinity, G(z) = e^{-z} q(z)

    ``q(z) = p(tanh(z/2))`` for Herglotz data ``p``, so Re q >= 0 on the strip.
    """
    name = 'strip_form'
    domain = DomainKind.STRIP
    classification = Classification.STRIP_INFINITY

    def __init__(self, p):
        if not isinstance(p, HerglotzData):
            raise ArgumentError('StripForm needs HerglotzData')
        self.p = p

    def q(self, z):
        return self.p.value(np.tanh(0.5 * np.asarray(z, dtype=complex)))

    def value(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.exp(-z) * self.q(z)
        return complex(out) if np.ndim(out) == 0 else out

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        zeta = np.tanh(0.5 * z)
        q_deriv = self.p.derivative(zeta) * 0.5 * (1.0 - zeta ** 2)
        out = np.exp(-z) * (q_deriv - self.p.value(zeta))
        return complex(out) if np.ndim(out) == 0 else out

    def to_dict(self):
        return {'kind': 'strip_form', 'p': self.p.to_dict()}
