"""Density recovery from Cauchy transform values just above the real line.
"""

import math
from dataclasses import dataclass

import numpy as np

from resolventlab.utils.errors import ArgumentError
from resolventlab.utils.logging import log_debug

EPS_LADDER = (1e-1, 1e-2, 1e-3)


@dataclass
class StieltjesResult:
    """Extrapolated density, per-sample monotonicity flags and the raw -Im G/pi ladder."""
    x: np.ndarray
    density: np.ndarray
    flags: np.ndarray
    raw: np.ndarray

    def rows(self):
        for x, d, f in zip(self.x, self.density, self.flags):
            yield float(x), float(d), bool(f)


def _richardson(samples, eps):
    # samples[..., k] at eps[k]; eliminate eps^1, eps^2, ... in turn (exact for a geometric ladder)
    table = [samples[..., k] for k in range(samples.shape[-1])]
    for order in range(1, len(eps)):
        factors = [(eps[k] / eps[k + 1]) ** order for k in range(len(table) - 1)]
        table = [(q * table[k + 1] - table[k]) / (q - 1.0) for k, q in enumerate(factors)]
    return table[0]


def stieltjes_invert(cauchy, x, eps_ladder=EPS_LADDER):
    """
    density(x) ~ -Im G(x + i eps)/pi, extrapolated to eps = 0

    Parameters
    ----------
    cauchy : callable or RealMeasure
        Cauchy transform on the upper half-plane (vectorized).
    x : float or array_like
        Real sample points.
    eps_ladder : sequence of float
        Strictly decreasing positive offsets.

    Returns
    -------
    result : StieltjesResult
        Negative extrapolants are clipped to 0; ``flags`` marks samples whose
        ladder is not monotone in eps.
    """
    eps = tuple(float(e) for e in eps_ladder)
    if len(eps) < 2 or any(e <= 0 for e in eps) or any(b >= a for a, b in zip(eps, eps[1:])):
        raise ArgumentError('eps ladder must be positive and strictly decreasing, got {}'.format(eps_ladder))
    G = cauchy.cauchy if hasattr(cauchy, 'cauchy') else cauchy
    x = np.atleast_1d(np.asarray(x, dtype=float))
    raw = np.stack([-np.imag(np.asarray(G(x + 1j * e), dtype=complex)) / math.pi for e in eps], axis=-1)
    steps = np.diff(raw, axis=-1)
    flags = ~(np.all(steps >= 0, axis=-1) | np.all(steps <= 0, axis=-1))
    density = np.maximum(_richardson(raw, eps), 0.0)
    if flags.any():
        log_debug('{} of {} density samples have a non-monotone eps ladder'.format(int(flags.sum()), x.size))
    return StieltjesResult(x=x, density=density, flags=flags, raw=raw)
