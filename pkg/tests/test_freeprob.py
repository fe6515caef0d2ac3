import cmath
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from resolventlab.freeprob.additive import (FIDTriple, boundary_f_transform, cauchy_transform, convolve_triples,
                                            f_transform, f_transform_derivative, free_convolve_phi,
                                            free_semigroup_f, in_wedge, monotone_convolve_f, monotone_semigroup_f,
                                            voiculescu_of_semigroup, voiculescu_transform)
from resolventlab.freeprob.measures import (CircleMeasure, RealMeasure, atomic, dirac, dirac_circle, semicircle,
                                            uniform_circle)
from resolventlab.freeprob.multiplicative import (MultSemigroupData, eta_t, mult_chain_J, mult_generator,
                                                  mult_transforms, psi, sigma_transform, sigma_transform_measure)
from resolventlab.freeprob.stieltjes import stieltjes_invert
from resolventlab.generators.measures import CIRCLE, FiniteMeasure
from resolventlab.resolvents.resolvent import solve_resolvent
from resolventlab.utils.errors import ArgumentError, DomainError, NumericalError, UnsupportedError

SEMICIRCLE_TRIPLE = FIDTriple(a=0.0, rho=FiniteMeasure.dirac(0.0))
UNIT_U = MultSemigroupData(alpha=0.0, rho=FiniteMeasure.dirac(0.0, support=CIRCLE))


def semicircle_f(t, w):
    root = np.sqrt(w * w - 4.0 * t + 0j)
    first, second = 0.5 * (w + root), 0.5 * (w - root)
    return first if first.imag > 0 else second


# measures and additive transforms

def test_measures_need_unit_mass():
    with pytest.raises(ArgumentError):
        RealMeasure(FiniteMeasure.dirac(0.0, weight=0.5))
    with pytest.raises(ArgumentError):
        CircleMeasure(FiniteMeasure.dirac(0.0))
    assert atomic([(-1.0, 0.25), (1.0, 0.75)]).measure.total_mass == pytest.approx(1.0)


def test_semicircle_closed_form_matches_quadrature():
    mu = semicircle()
    points = np.array([1.0 + 1.0j, -0.5 + 0.5j, 3.0 + 0.2j, 10j])
    assert_allclose(mu.cauchy(points), mu.without_law().cauchy(points), atol=1e-10)
    assert mu.cauchy(1e8j) == pytest.approx(1.0 / 1e8j, rel=1e-12)
    z, h = 0.3 + 0.7j, 1e-6
    assert mu.cauchy_derivative(z) == pytest.approx((mu.cauchy(z + h) - mu.cauchy(z - h)) / (2 * h), rel=1e-6)


def test_cauchy_transform_domain():
    with pytest.raises(DomainError):
        cauchy_transform(dirac(0.0), 1.0)
    assert cauchy_transform(dirac(1.0), 2.0 + 1.0j) == pytest.approx(1.0 / (1.0 + 1.0j))


def test_f_transform(half_plane_points):
    values = f_transform(semicircle(), half_plane_points)
    assert np.all(values.imag >= half_plane_points.imag - 1e-12)
    assert f_transform(dirac(2.0), 1.0 + 1.0j) == pytest.approx(-1.0 + 1.0j)
    z, h = 0.5 + 0.5j, 1e-6
    mu = atomic([(-1.0, 0.5), (1.0, 0.5)])
    assert f_transform_derivative(mu, z) == pytest.approx((f_transform(mu, z + h) - f_transform(mu, z - h)) / (2 * h),
                                                          rel=1e-6)


def test_semicircle_boundary_values():
    mu = semicircle()
    assert boundary_f_transform(mu, 0.0) == pytest.approx(1j, abs=1e-12)
    assert boundary_f_transform(mu, 1.0) == pytest.approx(0.5 + 0.5j * math.sqrt(3.0), abs=1e-12)
    with pytest.raises(UnsupportedError):
        boundary_f_transform(dirac(0.0), 0.0)


def test_wedge():
    assert in_wedge(20j)
    assert not in_wedge(5j)
    assert not in_wedge(30.0 + 20.0j)


def test_voiculescu_transform():
    for z in (15j, 3.0 + 20.0j, -10.0 + 40.0j):
        assert voiculescu_transform(semicircle(), z) == pytest.approx(1.0 / z, abs=1e-10)
        assert voiculescu_transform(dirac(2.0), z) == pytest.approx(2.0, abs=1e-10)
        assert voiculescu_transform(SEMICIRCLE_TRIPLE, z) == pytest.approx(1.0 / z)
    with pytest.raises(NumericalError):
        voiculescu_transform(semicircle(), 1j)


def test_free_convolution():
    z = 2.0 + 25.0j
    assert free_convolve_phi(semicircle(), dirac(1.0), z) == pytest.approx(1.0 / z + 1.0, abs=1e-10)
    both = convolve_triples(SEMICIRCLE_TRIPLE, FIDTriple(a=1.5, rho=FiniteMeasure.dirac(0.0, weight=2.0)))
    assert both.a == 1.5
    assert both.phi(z) == pytest.approx(1.5 + 3.0 / z)


def test_fid_generator(half_plane_points):
    triple = FIDTriple(a=0.5, rho=FiniteMeasure(atoms=[(-1.0, 0.2), (3.0, 0.4)]))
    G = triple.generator()
    assert_allclose(G.value(half_plane_points), -triple.phi(half_plane_points), atol=1e-12)
    assert triple.to_dict()['a'] == 0.5


@pytest.mark.parametrize('t', [0.5, 1.0, 2.0])
def test_free_semigroup_is_semicircle(half_plane_points, t):
    for w in half_plane_points:
        assert free_semigroup_f(SEMICIRCLE_TRIPLE, t, w) == pytest.approx(semicircle_f(t, w), abs=1e-10)


def test_voiculescu_of_semigroup_scales_with_time():
    z = 1.0 + 30.0j
    assert voiculescu_of_semigroup(SEMICIRCLE_TRIPLE, 2.0, z) == pytest.approx(2.0 / z, abs=1e-9)
    with pytest.raises(NumericalError):
        voiculescu_of_semigroup(SEMICIRCLE_TRIPLE, 2.0, 1j)


def test_monotone_convolution():
    z = 0.5 + 1.5j
    expected = f_transform(semicircle(), z - 1.0)
    assert monotone_convolve_f(semicircle(), dirac(1.0), z) == pytest.approx(expected)
    assert monotone_convolve_f(lambda w: w + 1.0, lambda w: 2.0 * w, z) == pytest.approx(2.0 * z + 1.0)


def test_monotone_semigroup():
    w = 0.3 + 1.0j
    value = monotone_semigroup_f(SEMICIRCLE_TRIPLE, 1.0, w, rk_tol=1e-12)
    assert value == pytest.approx(cmath.sqrt(w * w - 2.0), abs=1e-8)
    assert value.imag > 0


# multiplicative side

def test_psi_and_eta_of_dirac():
    mu = dirac_circle(0.7)
    z = 0.3 - 0.2j
    x = cmath.exp(0.7j)
    assert psi(mu, z) == pytest.approx(x * z / (1.0 - x * z))
    p, eta = mult_transforms(mu, z)
    assert eta == pytest.approx(x * z)
    with pytest.raises(DomainError):
        psi(mu, 1.2)


def test_sigma_transform_measure():
    mu = dirac_circle(0.7)
    assert sigma_transform_measure(mu, 0.0) == pytest.approx(cmath.exp(-0.7j))
    assert sigma_transform_measure(mu, 0.2 + 0.1j) == pytest.approx(cmath.exp(-0.7j), abs=1e-12)
    skewed = CircleMeasure(FiniteMeasure(atoms=[(0.0, 0.75), (math.pi, 0.25)], support=CIRCLE))
    z = 0.1 + 0.05j
    sigma = sigma_transform_measure(skewed, z)
    assert mult_transforms(skewed, sigma * z)[1] == pytest.approx(z, abs=1e-12)
    with pytest.raises(ArgumentError):
        sigma_transform_measure(uniform_circle(), 0.1)


def test_sigma_transform_of_semigroup_data():
    z = 0.2 + 0.1j
    assert sigma_transform(UNIT_U, 0.5, z) == pytest.approx(cmath.exp(0.5 * (1 + z) / (1 - z)))


def test_eta_t():
    eta = eta_t(UNIT_U, 0.1, 0.3)
    assert abs(eta) < 1.0
    assert eta * cmath.exp(0.1 * UNIT_U.u.value(eta)) == pytest.approx(0.3, abs=1e-12)
    assert eta_t(UNIT_U, 0.0, 0.3) == 0.3
    with pytest.raises(ArgumentError):
        eta_t(UNIT_U, -1.0, 0.3)


def test_mult_generator():
    G = mult_generator(UNIT_U)
    z = 0.4 + 0.8j
    zeta = cmath.exp(1j * z)
    assert G.value(z) == pytest.approx(1j * (1 + zeta) / (1 - zeta))
    h = 1e-6
    assert G.derivative(z) == pytest.approx((G.value(z + h) - G.value(z - h)) / (2 * h), rel=1e-6)
    assert G.value(z).imag >= 0
    assert G.to_dict()['kind'] == 'mult'


@pytest.mark.parametrize('t, z', [(0.2, 1j), (0.5, 0.3 + 2.0j), (1.0, -2.0 + 0.5j)])
def test_mult_chain_resolvent(t, z):
    J = mult_chain_J(UNIT_U, t, z)
    G = mult_generator(UNIT_U)
    assert J.imag > 0
    assert J - t * G.value(J) == pytest.approx(z, abs=1e-8)
    assert J == pytest.approx(solve_resolvent(G, t, z).value, abs=1e-8)


# Stieltjes inversion

def test_stieltjes_semicircle_density():
    result = stieltjes_invert(semicircle(), [0.0, 1.0, 3.0])
    assert result.density[0] == pytest.approx(1.0 / math.pi, abs=1e-5)
    assert result.density[1] == pytest.approx(math.sqrt(3.0) / (2.0 * math.pi), abs=1e-3)
    assert result.density[2] == pytest.approx(0.0, abs=1e-3)
    assert result.raw.shape == (3, 3)
    assert len(list(result.rows())) == 3


def test_stieltjes_richardson_exact_for_quadratic():
    def cauchy(z):
        eps = np.imag(z)
        return -1j * math.pi * (1.0 + eps + eps ** 2)
    result = stieltjes_invert(cauchy, [0.5], eps_ladder=(0.2, 0.1, 0.05))
    assert result.density[0] == pytest.approx(1.0, abs=1e-12)
    assert not result.flags[0]


def test_stieltjes_ladder_validation():
    for ladder in ((0.1,), (0.1, 0.1), (0.01, 0.1), (0.1, -0.01)):
        with pytest.raises(ArgumentError):
            stieltjes_invert(semicircle(), 0.0, ladder)
