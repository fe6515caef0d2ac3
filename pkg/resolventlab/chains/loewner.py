"""Decreasing Loewner chains K_t: the time-1 resolvents of accumulated Herglotz fields.
"""

from dataclasses import dataclass, field
from functools import partial

import numpy as np

from resolventlab.chains.field import HerglotzField, as_field
from resolventlab.domains.domains import DomainKind, as_point, contains, require_in_domain, sample_points
from resolventlab.generators.base import Generator, evaluate_many
from resolventlab.generators.catalog import DiskHyperbolic
from resolventlab.generators.criteria import is_generator_disk
from resolventlab.resolvents.resolvent import solve_resolvent
from resolventlab.utils.errors import ArgumentError, UndefinedDerivativeError
from resolventlab.utils.parallel import map_points

TAU_AVERAGE_RADIUS = 1e-6


def chain_map(F, t, w, **solver_kw):
    """
    K_t(w): the time-1 resolvent of H_t = integral of the field over [0, t]

    Parameters
    ----------
    F : HerglotzField or Generator
        Field, or an autonomous generator.
    t : float
        Chain time.
    w : complex
        Point of the domain.

    Returns
    -------
    solution : ResolventSolution
        ``value`` is K_t(w) and ``deriv`` is K_t'(w).
    """
    F = as_field(F)
    t = F.check_time(t)
    return solve_resolvent(F.accumulate(t), 1.0 if t > 0 else 0.0, w, **solver_kw)


def membership_mask(F, t, points):
    """Vectorized :func:`image_membership` over an array of domain points."""
    F = as_field(F)
    t = F.check_time(t)
    points = np.asarray(points, dtype=complex)
    inside = np.asarray(contains(F.domain, points), dtype=bool)
    if t == 0:
        return inside
    phi = points - np.asarray(F.accumulate(t).value(points))
    return inside & np.asarray(contains(F.domain, phi), dtype=bool)


def image_membership(F, t, z):
    """z lies in K_t(D) iff z - H_t(z) lies in D."""
    z = as_point(z)
    return bool(membership_mask(F, t, np.array([z]))[0])


@dataclass
class DecreasingReport:
    ok: bool
    n_points: int
    violation: tuple = None

    def __bool__(self):
        return self.ok

    def to_dict(self):
        data = {'ok': self.ok, 'n_points': self.n_points}
        if self.violation is not None:
            s, t, z = self.violation
            data['violation'] = {'s': s, 't': t, 'z': [z.real, z.imag]}
        return data


def decreasing_check(F, time_grid, sample_n=400, seed=0, probes=()):
    """
    Test K_t(D) ⊆ K_s(D) for consecutive times s < t on sample points

    Parameters
    ----------
    F : HerglotzField or Generator
    time_grid : sequence of float
        Increasing times.
    sample_n : int
        Seeded sample points of the domain.
    seed : int
    probes : sequence of complex
        Extra points (outside-domain probes are ignored).

    Returns
    -------
    report : DecreasingReport
        The first (s, t, z) with z in K_t(D) but not in K_s(D), if any.
    """
    F = as_field(F)
    times = [float(t) for t in time_grid]
    if any(b <= a for a, b in zip(times, times[1:])):
        raise ArgumentError('time grid must be strictly increasing')
    probes = np.asarray(probes, dtype=complex).ravel()
    points = np.concatenate([sample_points(F.domain, sample_n, seed), probes])
    points = points[np.asarray(contains(F.domain, points), dtype=bool)]
    masks = [membership_mask(F, t, points) for t in times]
    for (s, inside_s), (t, inside_t) in zip(zip(times, masks), zip(times[1:], masks[1:])):
        bad = np.flatnonzero(inside_t & ~inside_s)
        if bad.size:
            return DecreasingReport(ok=False, n_points=points.size, violation=(s, t, complex(points[bad[0]])))
    return DecreasingReport(ok=True, n_points=points.size)


def pde_residual(F, t, z, h=1e-4, **solver_kw):
    """
    |dK_t/dt(z) - K_t'(z) G(t, K_t(z))| with a centered difference in t

    Raises
    ------
    UndefinedDerivativeError
        The stencil [t - h, t + h] crosses a breakpoint or leaves [0, T_total].
    """
    F = as_field(F)
    t = F.check_time(t)
    if not h > 0:
        raise ArgumentError('h must be positive')
    if t - h < 0 or t + h > F.T_total:
        raise UndefinedDerivativeError('stencil [{}, {}] leaves the field range'.format(t - h, t + h))
    for b in F.breakpoints:
        if abs(t - b) <= h:
            raise UndefinedDerivativeError('t={} is within h of the breakpoint {}'.format(t, b))
    plus = chain_map(F, t + h, z, **solver_kw).value
    minus = chain_map(F, t - h, z, **solver_kw).value
    mid = chain_map(F, t, z, **solver_kw)
    field_value = complex(F.generator_at(t).value(mid.value))
    return abs((plus - minus) / (2.0 * h) - mid.deriv * field_value)


def _pt_value(G, t, z, solver_kw):
    J = solve_resolvent(G, t, z, **solver_kw).value
    tau = G.tau
    return (z - J) / (t * (z - tau) * (1.0 - np.conj(tau) * z))


def pt_transform(G, t, z, **solver_kw):
    """
    p_t(z) = (z - J_t(z)) / (t (z - tau)(1 - conj(tau) z)) for a disk generator with known tau

    The removable singularity at z = tau is filled by the mean over four points at distance 1e-6.
    """
    if G.domain is not DomainKind.DISK or G.tau is None:
        raise ArgumentError('pt_transform needs a disk generator with known Denjoy-Wolff point')
    t = float(t)
    if not t > 0:
        raise ArgumentError('pt_transform needs t > 0')
    z = as_point(z)
    require_in_domain(DomainKind.DISK, z)
    if abs(z - G.tau) < 1e-9:
        ring = z + TAU_AVERAGE_RADIUS * np.exp(0.5j * np.pi * np.arange(4))
        ring = [complex(p) for p in ring if contains(DomainKind.DISK, p)]
        return complex(np.mean([_pt_value(G, t, p, solver_kw) for p in ring]))
    return complex(_pt_value(G, t, z, solver_kw))


def zero_set_limit(G, t_list, grid):
    """Grid points that stay in K_t(D) for every t in ``t_list``."""
    grid = np.asarray(grid, dtype=complex).ravel()
    keep = np.ones(grid.shape, dtype=bool)
    F = as_field(G)
    for t in t_list:
        keep &= membership_mask(F, t, grid)
    return grid[keep]


class ChainComposite(Generator):
    """G o K_t for a field K; the object tested when a chain jumps to G at time t."""
    name = 'chain_composite'

    def __init__(self, G, F, t, **solver_kw):
        self.G = G
        self.F = as_field(F)
        self.t = self.F.check_time(t)
        self.solver_kw = solver_kw
        self.domain = G.domain
        self.tau = G.tau
        self.classification = G.classification

    def value(self, z):
        return evaluate_many(lambda w: self.G.value(chain_map(self.F, self.t, w, **self.solver_kw).value), z)

    def __repr__(self):
        return '{!r} o K_{:g}'.format(self.G, self.t)


@dataclass
class JumpSweepRow:
    alpha: float
    beta: float
    passed: bool
    witness: complex = None
    boundary_value: float = None

    def to_dict(self):
        data = {'alpha': self.alpha, 'beta': self.beta, 'passed': self.passed}
        if self.witness is not None:
            data.update(witness=[self.witness.real, self.witness.imag], boundary_value=self.boundary_value)
        return data


def jump_field(alpha, beta, T=1.0):
    """Rotated hyperbolic generator of angle alpha on [0, T), of angle beta afterwards."""
    return HerglotzField([(0.0, T, DiskHyperbolic(angle=alpha)), (T, np.inf, DiskHyperbolic(angle=beta))])


def rotation_jump_sweep(alphas, betas, T=1.0, grid_n=32, r_max=0.999, **solver_kw):
    """
    For each (alpha, beta), test whether G_beta o K_T is a generator with tau = 0

    Returns
    -------
    rows : list of JumpSweepRow
    """
    rows = []
    for alpha in alphas:
        for beta in betas:
            F = jump_field(alpha, beta, T)
            H = ChainComposite(F.segments[1].generator, F, T, **solver_kw)
            result = is_generator_disk(H, 0.0, grid_n=grid_n, r_max=r_max)
            rows.append(JumpSweepRow(float(alpha), float(beta), result.passed, result.witness,
                                     result.boundary_value))
    return rows


@dataclass
class ChainSample:
    """K_t at fixed points over a time grid; rows are (t, z, K_t(z), member, residual)."""
    times: list
    points: np.ndarray
    values: np.ndarray = field(default=None)
    residuals: np.ndarray = field(default=None)
    members: np.ndarray = field(default=None)

    def rows(self):
        for i, t in enumerate(self.times):
            for j, z in enumerate(self.points):
                yield t, z, self.values[i, j], bool(self.members[i, j]), self.residuals[i, j]


def _chain_point(F, times, solver_kw, z):
    out = []
    for t in times:
        solution = chain_map(F, t, z, **solver_kw)
        out.append((solution.value, solution.residual))
    return out


def sample_chain(F, times, points, jobs=1, **solver_kw):
    """
    Evaluate K_t on a point set for every time in ``times``

    Returns
    -------
    sample : ChainSample
    """
    F = as_field(F)
    times = [F.check_time(t) for t in times]
    points = np.asarray(points, dtype=complex).ravel()
    per_point = map_points(partial(_chain_point, F, times, solver_kw), points, jobs=jobs, desc='chain')
    values = np.array([[v for v, _ in row] for row in per_point], dtype=complex).T.reshape(len(times), points.size)
    residuals = np.array([[r for _, r in row] for row in per_point], dtype=float).T.reshape(len(times), points.size)
    members = np.array([membership_mask(F, t, points) for t in times]).reshape(len(times), points.size)
    return ChainSample(times=times, points=points, values=values, residuals=residuals, members=members)
