"""Cauchy, F and Voiculescu transforms; additive free and monotone convolution semigroups
as resolvent families on the upper half-plane.
"""

from dataclasses import dataclass, field

import numpy as np

from resolventlab.domains.domains import DomainKind, as_point, require_in_domain
from resolventlab.generators.generator import HalfPlanePick
from resolventlab.generators.measures import FiniteMeasure
from resolventlab.generators.representations import NevanlinnaTriple
from resolventlab.resolvents.resolvent import solve_resolvent
from resolventlab.semigroups.flow import ode_flow
from resolventlab.utils.errors import ArgumentError, NumericalError, SingularityError, UnsupportedError
from resolventlab.utils.logging import log_debug


def _out(value):
    return complex(value) if np.ndim(value) == 0 else value


def cauchy_transform(mu, z):
    """G_mu(z) = int 1/(z - x) mu(dx) for Im z > 0; the value lies in the closed lower half-plane."""
    require_in_domain(DomainKind.HALF_PLANE, z)
    return _out(mu.cauchy(z))


def f_transform(mu, z):
    """F_mu(z) = 1/G_mu(z), a self-map of the upper half-plane."""
    G = np.asarray(cauchy_transform(mu, z))
    if np.any(G == 0):
        raise SingularityError('Cauchy transform vanishes at {}'.format(z))
    return _out(1.0 / G)


def f_transform_derivative(mu, z):
    G = np.asarray(mu.cauchy(z))
    return _out(-np.asarray(mu.cauchy_derivative(z)) / G ** 2)


def boundary_f_transform(mu, x):
    """
    Boundary values F_mu(x + i0) on the real line

    Only measures with a closed form (the semicircle) provide them.
    """
    law = getattr(mu, 'law', None)
    if law is None or not hasattr(law, 'boundary_cauchy'):
        raise UnsupportedError('{!r} has no closed-form boundary values'.format(mu))
    return _out(1.0 / law.boundary_cauchy(x))


@dataclass(frozen=True)
class FIDTriple:
    """
    Voiculescu transform phi(z) = a + int (1 + z x)/(z - x) rho(dx) of a
    freely infinitely divisible law mu_1; its semigroup has phi_{mu_t} = t phi
    """
    a: float = 0.0
    rho: FiniteMeasure = field(default_factory=FiniteMeasure.zero)

    def __post_init__(self):
        if not np.isfinite(self.a):
            raise ArgumentError('non-finite drift a')

    def phi(self, z):
        z = np.asarray(z, dtype=complex)
        return _out(self.a + self.rho.integrate(lambda z, x: (1.0 + z * x) / (z - x), z))

    def generator(self):
        """The Pick generator -phi, i.e. the Nevanlinna triple (0, -a, rho)."""
        return HalfPlanePick(NevanlinnaTriple(alpha=0.0, beta=-self.a, rho=self.rho))

    def to_dict(self):
        return dict(a=float(self.a), **self.rho.to_dict())


def in_wedge(z, gamma=1.0, delta=10.0):
    z = complex(z)
    return abs(z.real) < gamma * z.imag and abs(z) > delta


def _invert_half_plane_map(func, deriv, z, tol=1e-14, max_iter=100):
    """Newton solve of func(zeta) = z seeded at zeta = z, kept in the upper half-plane."""
    zeta = z
    scale = max(1.0, abs(z))
    for _ in range(max_iter):
        residual = func(zeta) - z
        if abs(residual) <= tol * scale:
            return zeta
        d = deriv(zeta)
        if d == 0 or not np.isfinite(d):
            break
        step = -residual / d
        lam = 1.0
        while (zeta + lam * step).imag <= 0 and lam > 1e-8:
            lam *= 0.5
        zeta = zeta + lam * step
    raise NumericalError('inversion near {} did not converge'.format(z))


def voiculescu_transform(mu, z, gamma=1.0, delta=10.0, tol=1e-14, max_iter=100):
    """
    phi_mu(z) = F_mu^{-1}(z) - z on the wedge |Re z| < gamma Im z, |z| > delta

    ``FIDTriple`` inputs are evaluated from their representation.

    Raises
    ------
    NumericalError
        z outside the wedge, or the Newton inversion failed.
    """
    if isinstance(mu, FIDTriple):
        return mu.phi(z)
    z = as_point(z)
    if not in_wedge(z, gamma, delta):
        raise NumericalError('{} lies outside the inversion wedge (gamma={}, delta={})'.format(z, gamma, delta))
    zeta = _invert_half_plane_map(lambda s: f_transform(mu, s), lambda s: f_transform_derivative(mu, s), z,
                                  tol=tol, max_iter=max_iter)
    phi = zeta - z
    if phi.imag > 1e-10 * max(1.0, abs(z)):
        log_debug('Voiculescu transform has positive imaginary part {} at {}'.format(phi.imag, z))
    return phi


def free_semigroup_f(triple, t, w, **solver_kw):
    """F_{mu_t}(w): the time-t resolvent of G = -phi at w."""
    return solve_resolvent(triple.generator(), t, w, **solver_kw).value


def voiculescu_of_semigroup(triple, t, z, gamma=1.0, delta=10.0, tol=1e-13, **solver_kw):
    """phi_{mu_t}(z) by inverting the resolvent family F_{mu_t} = J_t numerically."""
    z = as_point(z)
    if not in_wedge(z, gamma, delta):
        raise NumericalError('{} lies outside the inversion wedge'.format(z))
    G = triple.generator()
    cache = {}

    def solve(s):
        if s not in cache:
            cache[s] = solve_resolvent(G, t, s, **solver_kw)
        return cache[s]
    zeta = _invert_half_plane_map(lambda s: solve(s).value, lambda s: solve(s).deriv, z, tol=tol)
    return zeta - z


def convolve_triples(first, second):
    """Free convolution of two FID laws at the level of their triples."""
    return FIDTriple(a=first.a + second.a, rho=first.rho + second.rho)


def free_convolve_phi(mu, nu, z, **kw):
    """phi_{mu ⊞ nu}(z) = phi_mu(z) + phi_nu(z)."""
    return voiculescu_transform(mu, z, **kw) + voiculescu_transform(nu, z, **kw)


def monotone_convolve_f(mu, nu, z):
    """F_{mu ▷ nu}(z) = F_mu(F_nu(z)); measures or F-transform callables."""
    inner = nu(z) if callable(nu) else f_transform(nu, z)
    return mu(inner) if callable(mu) else f_transform(mu, inner)


def monotone_semigroup_f(triple, t, w, rk_tol=1e-10):
    """g_t(w): the semigroup of G = -phi, the F-transforms of a monotone convolution semigroup."""
    return ode_flow(triple.generator(), t, w, rk_tol=rk_tol)
