"""Numerical generator-hood tests and the angular residue at infinity.
"""

from dataclasses import dataclass

import numpy as np

from resolventlab.domains.domains import as_point, radial_grid
from resolventlab.generators.base import Generator, evaluate_many
from resolventlab.generators.representations import NevanlinnaTriple
from resolventlab.utils.errors import ArgumentError, NumericalError
from resolventlab.utils.logging import log_debug

EXTRAPOLATION_RADII = (0.999, 0.998, 0.997, 0.996)
TAU_EXCLUSION = 1e-9


def _vectorized(H):
    if isinstance(H, Generator):
        return H.value
    return lambda z: evaluate_many(H, z)


@dataclass
class GeneratorTestResult:
    """Outcome of :func:`is_generator_disk`; falsy when a witness was found."""
    passed: bool
    tau: complex
    n_points: int
    witness: complex = None
    witness_value: float = None
    boundary_value: float = None

    def __bool__(self):
        return self.passed

    def to_dict(self):
        data = {'passed': self.passed, 'tau': [self.tau.real, self.tau.imag], 'n_points': self.n_points}
        if self.witness is not None:
            data.update(witness=[self.witness.real, self.witness.imag],
                        witness_value=self.witness_value, boundary_value=self.boundary_value)
        return data


def berkson_porta_ratio(H, tau):
    """z -> Re[H(z) / ((tau - z)(1 - conj(tau) z))], the quantity a generator keeps non-negative."""
    func = _vectorized(H)
    tau_bar = np.conj(tau)

    def ratio(z):
        z = np.asarray(z, dtype=complex)
        return np.real(np.asarray(func(z)) / ((tau - z) * (1.0 - tau_bar * z)))
    return ratio


def radial_boundary_value(ratio, z):
    """Cubic extrapolation of ``ratio`` to the unit circle along the ray through ``z``."""
    ray = np.exp(1j * np.angle(z))
    radii = np.asarray(EXTRAPOLATION_RADII)
    values = ratio(radii * ray)
    coeffs = np.polyfit(1.0 - radii, values, len(radii) - 1)
    return float(np.polyval(coeffs, 0.0))


def is_generator_disk(H, tau, grid_n=64, r_max=0.999, tol=1e-12, probes=()):
    """
    Falsification test of the Berkson-Porta form on the unit disk

    Parameters
    ----------
    H : Generator or callable
        Holomorphic function on the disk (callables are evaluated pointwise).
    tau : complex
        Candidate Denjoy-Wolff point, |tau| <= 1.
    grid_n : int
        The grid has ``grid_n`` angles times ``grid_n`` radii up to ``r_max``.
    r_max : float
        Outermost radius.
    tol : float
        Values below ``-tol`` are violations.
    probes : sequence of complex
        Extra points tested before the grid; a violating probe is returned as witness.

    Returns
    -------
    result : GeneratorTestResult
        ``passed`` or the most negative point with its value and the radial
        extrapolation of the value to the boundary.
    """
    tau = as_point(tau)
    if abs(tau) > 1.0 + 1e-12:
        raise ArgumentError('candidate tau must satisfy |tau| <= 1, got {}'.format(tau))
    if grid_n < 1 or not 0.0 < r_max < 1.0:
        raise ArgumentError('grid_n >= 1 and 0 < r_max < 1 required')
    ratio = berkson_porta_ratio(H, tau)
    n_points = 0
    stages = []
    probes = np.asarray(probes, dtype=complex).ravel()
    if probes.size:
        stages.append(probes)
    stages.append(radial_grid(grid_n, r_max))
    for points in stages:
        points = points[(np.abs(points) < 1.0) & (np.abs(points - tau) > TAU_EXCLUSION)]
        if not points.size:
            continue
        values = ratio(points)
        n_points += points.size
        worst = int(np.argmin(values))
        if values[worst] < -tol:
            witness = complex(points[worst])
            result = GeneratorTestResult(passed=False, tau=tau, n_points=n_points, witness=witness,
                                         witness_value=float(values[worst]),
                                         boundary_value=radial_boundary_value(ratio, witness))
            log_debug('generator test failed at {} (value {:.6g}, boundary {:.6g})'.format(
                witness, result.witness_value, result.boundary_value))
            return result
    return GeneratorTestResult(passed=True, tau=tau, n_points=n_points)


def angular_residue_b(G, k_min=4, k_max=20, spread_tol=1e-4):
    """
    b = lim G(iy)/(iy) for a Pick-type generator on the half-plane

    Exact for inputs that carry their Nevanlinna alpha. Otherwise G(iy)/(iy) is
    sampled at y = 2^k and stabilized by one Richardson step
    ``2 r(2y) - r(y)``, which removes the 1/y term.

    Returns
    -------
    b : float
        Non-negative angular residue.
    """
    if isinstance(G, NevanlinnaTriple):
        return float(G.alpha)
    if getattr(G, 'pick_alpha', None) is not None:
        return float(G.pick_alpha)
    func = _vectorized(G)
    iy = 1j * 2.0 ** np.arange(k_min, k_max + 1)
    ratios = np.asarray(func(iy), dtype=complex) / iy
    stabilized = 2.0 * ratios[1:] - ratios[:-1]
    tail = stabilized[-4:]
    if not np.all(np.isfinite(tail)):
        raise NumericalError('non-finite values of G(iy)/(iy)')
    spread = float(np.max(np.abs(tail[:, None] - tail[None, :])))
    if spread > spread_tol:
        raise NumericalError('G(iy)/(iy) does not settle (spread {:.3g})'.format(spread))
    return max(float(tail[-1].real), 0.0)
