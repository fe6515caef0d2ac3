"""Named verification pipelines; each returns a CheckReport that the CLI writes as JSON.
"""

import inspect
import math
from dataclasses import dataclass, field

import numpy as np

from resolventlab.chains.field import HerglotzField
from resolventlab.chains.loewner import (ChainComposite, chain_map, decreasing_check, jump_field, pde_residual,
                                         pt_transform)
from resolventlab.domains.domains import DomainKind, radial_grid, sample_points
from resolventlab.domains.maps import CAYLEY, conjugate_generator, conjugate_self_map
from resolventlab.freeprob.additive import FIDTriple, boundary_f_transform, free_semigroup_f, voiculescu_transform
from resolventlab.freeprob.measures import semicircle
from resolventlab.freeprob.multiplicative import MultSemigroupData, eta_t, mult_chain_J, mult_generator
from resolventlab.freeprob.stieltjes import stieltjes_invert
from resolventlab.generators.catalog import catalog
from resolventlab.generators.criteria import is_generator_disk
from resolventlab.generators.measures import CIRCLE, FiniteMeasure
from resolventlab.resolvents.contour import count_zeros_rect
from resolventlab.resolvents.resolvent import solve_resolvent
from resolventlab.resolvents.window import existence_window, strip_inf_c
from resolventlab.semigroups.flow import convergence_table, ode_flow
from resolventlab.utils.errors import ArgumentError, NoSolutionError
from resolventlab.utils.logging import log_debug

NO_SOLUTION_WITNESS = 0.999 * complex(math.cos(3.0), math.sin(3.0))
NO_SOLUTION_BOUNDARY = -0.47113


@dataclass
class CheckReport:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return {'name': self.name, 'passed': bool(self.passed), 'details': self.details}


def _pair(z):
    z = complex(z)
    return [z.real, z.imag]


def wedge_points(n, seed=0, gamma=1.0, delta=10.0):
    """Seeded points with |Re z| < gamma Im z / 2 and 2 delta < |z| < 6 delta."""
    rng = np.random.default_rng(seed)
    y = 2.0 * delta + 4.0 * delta * rng.random(n)
    x = (rng.random(n) - 0.5) * gamma * y
    return x + 1j * y


def check_no_solution(seed=0, **solver_kw):
    """
    Two-segment chain (G1 on [0, 1), G2 after) that is not decreasing

    K_1(w) = w/(w + 2) on sample points; G2 o K_1 fails the Berkson-Porta test
    at 0.999 e^{3i} with boundary value about -0.47113; the decreasing check is
    probed around K_1(0.999 e^{3i}) just after t = 1.
    """
    F = jump_field(0.0, math.pi, 1.0)
    points = sample_points(DomainKind.DISK, 20, seed)
    k1_error = max(abs(chain_map(F, 1.0, w, **solver_kw).value - w / (w + 2.0)) for w in points)
    H = ChainComposite(F.segments[1].generator, F, 1.0, **solver_kw)
    test = is_generator_disk(H, 0.0, probes=[NO_SOLUTION_WITNESS])
    center = chain_map(F, 1.0, NO_SOLUTION_WITNESS, **solver_kw).value
    offsets = np.linspace(-0.01, 0.01, 41)
    probes = center + offsets[None, :] + 1j * offsets[:, None]
    decreasing = decreasing_check(F, [1.0, 1.005, 1.01], sample_n=100, seed=seed, probes=probes.ravel())
    witness_ok = (not test.passed and test.boundary_value is not None
                  and abs(test.boundary_value - NO_SOLUTION_BOUNDARY) < 1e-3)
    # the chain must fail to decrease across the jump at t = 1
    jump_ok = not decreasing.ok and decreasing.violation[0] <= 1.0 < decreasing.violation[1]
    return CheckReport('no_solution', k1_error < 1e-10 and witness_ok and jump_ok,
                       {'k1_max_error': k1_error, 'generator_test': test.to_dict(),
                        'decreasing': decreasing.to_dict()})


def check_solution_exists(grid_n=100, **solver_kw):
    """-K_1 for K_1(z) = z/(z + 2) is a generator with tau = 0 (Re 1/(z + 2) > 0)."""
    F = HerglotzField.autonomous(catalog('disk_hyperbolic', variant='G1'))
    H = ChainComposite(catalog('disk_minus_z'), F, 1.0, **solver_kw)
    test = is_generator_disk(H, 0.0, grid_n=grid_n)
    return CheckReport('solution_exists', test.passed, test.to_dict())


HALFPLANE_WINDOW_POINT = 0.2 + 0.3j


def check_halfplane_window(w=HALFPLANE_WINDOW_POINT, **solver_kw):
    """G(z) = z on the half-plane: window [0, 1), solvable at 0.999, collapse at 1.001."""
    G = catalog('halfplane_z')
    window = existence_window(G)
    w = complex(w)
    inside = solve_resolvent(G, 0.999, w, **solver_kw)
    inside_error = abs(inside.value - w / (1.0 - 0.999))
    try:
        solve_resolvent(G, 1.001, w, **solver_kw)
        collapse = None
    except NoSolutionError as e:
        collapse = e.last_good_t
    passed = abs(window.t_max - 1.0) < 1e-12 and inside_error < 1e-10 * abs(inside.value) and collapse is not None
    return CheckReport('halfplane_window', passed,
                       {'window': window.to_dict(), 'w': _pair(w), 'error_at_0.999': inside_error,
                        'collapse_at': collapse})


def check_exponential_formula(ns=(2, 4, 8, 16, 32, 64, 128), rk_tol=1e-12, **solver_kw):
    """|J_{1/n}^n(0.5) - F_1(0.5)| decreases in n for G = -z."""
    G = catalog('disk_minus_z')
    reference = ode_flow(G, 1.0, 0.5, rk_tol=rk_tol)
    rows = convergence_table(G, 1.0, 0.5, ns, reference=reference, **solver_kw)
    errors = [e for _, e in rows]
    monotone = all(b < a for a, b in zip(errors, errors[1:]))
    passed = monotone and errors[-1] < 5e-3 and abs(reference - 0.5 * math.exp(-1.0)) < 1e-6
    return CheckReport('exponential_formula', passed,
                       {'reference': _pair(reference), 'rows': [[n, e] for n, e in rows]})


def check_conjugation(seed=0, **solver_kw):
    """
    Cayley conjugates: (1 - z^2)/2 becomes z and -z becomes (i/2)(z^2 + 1)

    The conjugated resolvent of -z differs from the resolvent of its conjugate.
    """
    points = sample_points(DomainKind.HALF_PLANE, 50, seed)
    parabolic = conjugate_generator(catalog('disk_parabolic'), CAYLEY)
    linear = conjugate_generator(catalog('disk_minus_z'), CAYLEY)
    err_parabolic = float(np.max(np.abs(parabolic.value(points) - points)))
    err_linear = float(np.max(np.abs(linear.value(points) - 0.5j * (points ** 2 + 1.0))))
    w = 1.0 + 1.0j
    disk_resolvent = catalog('disk_minus_z')
    moved = conjugate_self_map(lambda z: solve_resolvent(disk_resolvent, 1.0, z, **solver_kw).value, CAYLEY)(w)
    direct = solve_resolvent(linear, 1.0, w, **solver_kw).value
    passed = err_parabolic < 1e-12 and err_linear < 1e-12 and abs(moved - direct) > 1e-3
    return CheckReport('conjugation', passed,
                       {'parabolic_error': err_parabolic, 'linear_error': err_linear,
                        'conjugated_resolvent': _pair(moved), 'resolvent_of_conjugate': _pair(direct)})


def semicircle_semigroup_oracle(t, w):
    """Root of z^2 - w z + t = 0 in the upper half-plane."""
    root = np.sqrt(w * w - 4.0 * t + 0j)
    first, second = 0.5 * (w + root), 0.5 * (w - root)
    return first if first.imag > 0 else second


def check_semicircle(seed=0, gamma=1.0, delta=10.0, eps_ladder=(1e-1, 1e-2, 1e-3), **solver_kw):
    """Boundary value, Voiculescu transform, semigroup and density of the semicircle law."""
    mu = semicircle()
    boundary_error = abs(boundary_f_transform(mu, 0.0) - 1j)
    phi_error = max(abs(voiculescu_transform(mu, z, gamma=gamma, delta=delta) - 1.0 / z)
                    for z in wedge_points(20, seed, gamma, delta))
    triple = FIDTriple(a=0.0, rho=FiniteMeasure.dirac(0.0))
    points = sample_points(DomainKind.HALF_PLANE, 20, seed)
    semigroup_error = max(abs(free_semigroup_f(triple, t, w, **solver_kw) - semicircle_semigroup_oracle(t, w))
                          for t in (0.5, 1.0, 2.0) for w in points)
    density = float(stieltjes_invert(mu, 0.0, eps_ladder).density[0])
    passed = (boundary_error < 1e-12 and phi_error < 1e-8 and semigroup_error < 1e-8
              and abs(density - 1.0 / math.pi) < 1e-3)
    return CheckReport('semicircle', passed,
                       {'boundary_error': boundary_error, 'voiculescu_error': phi_error,
                        'semigroup_error': semigroup_error, 'density_at_0': density})


def check_multiplicative(**solver_kw):
    """eta_t back-substitution and the half-plane resolvents J_t for u = (1 + z)/(1 - z)."""
    data = MultSemigroupData(alpha=0.0, rho=FiniteMeasure.dirac(0.0, support=CIRCLE))
    eta = eta_t(data, 0.1, 0.3)
    eta_residual = abs(eta * np.exp(0.1 * data.u.value(eta)) - 0.3)
    G = mult_generator(data)
    J = mult_chain_J(data, 0.2, 1j)
    identity_residual = abs(J - 0.2 * G.value(J) - 1j)
    direct = solve_resolvent(G, 0.2, 1j, **solver_kw).value
    passed = eta_residual < 1e-12 and abs(eta) < 1 and identity_residual < 1e-8 and abs(J - direct) < 1e-8
    return CheckReport('multiplicative', passed,
                       {'eta': _pair(eta), 'eta_residual': eta_residual, 'J': _pair(J),
                        'identity_residual': identity_residual, 'solve_resolvent': _pair(direct)})


def check_strip_bound(**solver_kw):
    """G = 1 on the strip: c = 0, J_t(w) = w + t and a single zero of z - tG(z) - w."""
    G = catalog('strip_const', c=1.0)
    c = strip_inf_c(G)
    w = 0.3 + 0.4j
    errors = [abs(solve_resolvent(G, t, w, **solver_kw).value - (w + t)) for t in (1.0, 10.0)]
    zeros = count_zeros_rect(lambda z: z - G.value(z) - w, ((-1.0, 4.0), (-1.5, 1.5)), vectorized=True)
    passed = abs(c) < 1e-12 and max(errors) < 1e-12 and zeros == 1
    return CheckReport('strip_bound', passed, {'c': c, 'errors': errors, 'zeros': zeros})


DECREASING_CATALOG = (
    ('disk_minus_z', {}),
    ('disk_hyperbolic', {'variant': 'G1'}),
    ('disk_hyperbolic', {'variant': 'G2'}),
    ('disk_parabolic', {}),
    ('disk_rotation_hyperbolic', {'angle': 1.0}),
)


def check_decreasing_chains(seed=0, sample_n=400, grid_n=16, **solver_kw):
    """Autonomous chains decrease, solve their PDE and have p_t with Re >= 0."""
    details = {'decreasing': {}, 'pt_min_real': {}}
    passed = True
    for name, params in DECREASING_CATALOG:
        G = catalog(name, **params)
        label = name + ''.join('_{}'.format(v) for v in params.values())
        report = decreasing_check(G, [0.0, 0.25, 0.5, 1.0, 2.0], sample_n=sample_n, seed=seed)
        details['decreasing'][label] = report.to_dict()
        passed &= report.ok
        if G.tau is not None:
            grid = radial_grid(grid_n, 0.99)
            low = min(pt_transform(G, t, z, **solver_kw).real for t in (0.5, 1.0, 2.0) for z in grid)
            details['pt_min_real'][label] = low
            passed &= low >= -1e-9
    jump = jump_field(0.0, math.pi, 1.0)
    residual = pde_residual(jump, 0.5, 0.3 + 0.2j, h=1e-4, **solver_kw)
    details['pde_residual'] = residual
    passed &= residual < 1e-6
    log_debug('decreasing chains: {}'.format(details))
    return CheckReport('decreasing_chains', bool(passed), details)


CHECKS = {
    'no_solution': check_no_solution,
    'solution_exists': check_solution_exists,
    'halfplane_window': check_halfplane_window,
    'exponential_formula': check_exponential_formula,
    'conjugation': check_conjugation,
    'semicircle': check_semicircle,
    'multiplicative': check_multiplicative,
    'strip_bound': check_strip_bound,
    'decreasing_chains': check_decreasing_chains,
}


SOLVER_KEYS = ('tol', 'min_step', 'max_newton_iter', 'initial_step', 'max_damping')


def run_check(name, **kw):
    """Run a named check; keyword arguments it does not take (other than solver controls) are dropped."""
    if name not in CHECKS:
        raise ArgumentError('unknown check {!r}; expected one of {}'.format(name, sorted(CHECKS)))
    func = CHECKS[name]
    accepted = set(inspect.signature(func).parameters) | set(SOLVER_KEYS)
    return func(**{k: v for k, v in kw.items() if k in accepted})
