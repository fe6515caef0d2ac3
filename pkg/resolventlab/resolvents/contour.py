"""Zero counting by the argument principle on axis-parallel rectangles.
"""

import numpy as np

from resolventlab.generators.base import evaluate_many
from resolventlab.utils.errors import ArgumentError, ContourError, ResolutionError

MIN_MODULUS = 1e-8
INTEGER_SLACK = 0.1
MAX_PHASE_STEP = 0.5 * np.pi


def rectangle_contour(rect, n_per_side):
    """Counterclockwise closed polygon of the rectangle ``[(x_lo, x_hi), (y_lo, y_hi)]``."""
    (x_lo, x_hi), (y_lo, y_hi) = rect
    if not (x_hi > x_lo and y_hi > y_lo):
        raise ArgumentError('degenerate rectangle {}'.format(rect))
    corners = [complex(x_lo, y_lo), complex(x_hi, y_lo), complex(x_hi, y_hi), complex(x_lo, y_hi)]
    sides = [np.linspace(a, b, n_per_side, endpoint=False)
             for a, b in zip(corners, corners[1:] + corners[:1])]
    return np.concatenate(sides + [np.array([corners[0]])])


def count_zeros_rect(f, rect, n_per_side=400, vectorized=False):
    """
    Number of zeros of ``f`` inside a rectangle

    Parameters
    ----------
    f : callable
        Holomorphic near the closed rectangle and zero-free on its boundary.
    rect : tuple
        ``((x_lo, x_hi), (y_lo, y_hi))``.
    n_per_side : int
        Boundary samples per side.
    vectorized : bool
        Whether ``f`` accepts arrays.

    Returns
    -------
    count : int
        Winding number of f along the boundary.

    Raises
    ------
    ContourError
        |f| < 1e-8 somewhere on the boundary.
    ResolutionError
        The phase jumps by more than pi/2 between samples, or the winding is not
        within 0.1 of an integer; refine ``n_per_side``.
    """
    if n_per_side < 4:
        raise ArgumentError('n_per_side must be >= 4')
    path = rectangle_contour(rect, int(n_per_side))
    values = np.asarray(f(path) if vectorized else evaluate_many(f, path), dtype=complex)
    if not np.all(np.isfinite(values)):
        raise ContourError('f is not finite on the contour')
    if np.min(np.abs(values)) < MIN_MODULUS:
        raise ContourError('f nearly vanishes on the contour (min |f| = {:.3g})'.format(np.min(np.abs(values))))
    phase = np.unwrap(np.angle(values))
    if np.max(np.abs(np.diff(phase))) > MAX_PHASE_STEP:
        raise ResolutionError('phase of f is under-resolved; increase n_per_side')
    winding = (phase[-1] - phase[0]) / (2.0 * np.pi)
    count = int(np.round(winding))
    if abs(winding - count) > INTEGER_SLACK:
        raise ResolutionError('winding {:.4f} is not close to an integer'.format(winding))
    return count
