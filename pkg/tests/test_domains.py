import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from resolventlab.domains.domains import (DomainKind, as_point, boundary_distance, contains, horocycle,
                                          hyperbolic_disk, radial_grid, require_in_domain, sample_points)
from resolventlab.domains.maps import (CAYLEY, CAYLEY_INV, STRIP_MAP, STRIP_MAP_INV, affine, cayley, cayley_inv,
                                       conjugate_generator, conjugate_self_map, identity, strip_map,
                                       strip_map_inv)
from resolventlab.generators.base import CustomGenerator
from resolventlab.generators.catalog import catalog
from resolventlab.semigroups.flow import ode_flow
from resolventlab.utils.errors import ArgumentError, DomainError


@pytest.mark.parametrize('kind, inside, outside', [
    (DomainKind.DISK, 0.5 + 0.5j, 1.0 + 0j),
    (DomainKind.HALF_PLANE, -3.0 + 0.1j, 2.0 + 0j),
    (DomainKind.STRIP, 100.0 + 1.5j, 0.0 + 0.5j * math.pi),
])
def test_contains(kind, inside, outside):
    assert contains(kind, inside)
    assert not contains(kind, outside)
    assert not contains(kind, complex(math.nan, 0.5))


def test_contains_vectorized():
    mask = contains(DomainKind.DISK, np.array([0.0, 0.99, 1.01]))
    assert mask.tolist() == [True, True, False]


def test_as_point_rejects_non_finite():
    with pytest.raises(ArgumentError):
        as_point(complex(math.inf, 0.0))


def test_require_in_domain():
    require_in_domain(DomainKind.HALF_PLANE, 1j)
    with pytest.raises(DomainError):
        require_in_domain(DomainKind.HALF_PLANE, -1j)


def test_domain_parse():
    assert DomainKind.parse('Half_Plane') is DomainKind.HALF_PLANE
    with pytest.raises(ArgumentError):
        DomainKind.parse('annulus')


def test_boundary_distance():
    assert boundary_distance(DomainKind.DISK, 0.25) == pytest.approx(0.75)
    assert boundary_distance(DomainKind.HALF_PLANE, 3.0 + 2.0j) == pytest.approx(2.0)
    assert boundary_distance(DomainKind.STRIP, 1.0j) == pytest.approx(0.5 * math.pi - 1.0)


@pytest.mark.parametrize('kind', list(DomainKind))
def test_sample_points_are_seeded_and_inside(kind):
    first = sample_points(kind, 50, seed=3)
    assert np.all(contains(kind, first))
    assert_allclose(first, sample_points(kind, 50, seed=3))
    assert not np.allclose(first, sample_points(kind, 50, seed=4))


def test_radial_grid():
    grid = radial_grid(10, 0.9)
    assert grid.shape == (100,)
    assert np.max(np.abs(grid)) == pytest.approx(0.9)


def test_hyperbolic_disk():
    centered = hyperbolic_disk(0.0, 0.5)
    assert centered.center == 0
    assert centered.radius == pytest.approx(0.5)
    region = hyperbolic_disk(0.5, 0.5)
    assert region.center == pytest.approx(0.4)
    assert region.radius == pytest.approx(0.4)
    assert region.hyperbolic_radius == pytest.approx(math.atanh(0.5))
    with pytest.raises(ArgumentError):
        hyperbolic_disk(1.0, 0.5)
    with pytest.raises(ArgumentError):
        hyperbolic_disk(0.0, 1.0)


def test_horocycle():
    region = horocycle(1.0, 1.0)
    assert region.center == pytest.approx(0.5)
    assert region.radius == pytest.approx(0.5)
    assert region.contains(0.9)
    assert not region.contains(-0.1)
    with pytest.raises(ArgumentError):
        horocycle(0.5, 1.0)
    with pytest.raises(ArgumentError):
        horocycle(1.0, 0.0)


def test_cayley_pair(half_plane_points):
    assert cayley(1j) == pytest.approx(0.0)
    disk = cayley(half_plane_points)
    assert np.all(np.abs(disk) < 1.0)
    assert_allclose(cayley_inv(disk), half_plane_points, rtol=1e-12)
    with pytest.raises(DomainError):
        cayley(-1j)
    with pytest.raises(DomainError):
        cayley_inv(1.0)


def test_strip_pair(disk_points):
    strip = strip_map(disk_points)
    assert np.all(contains(DomainKind.STRIP, strip))
    assert_allclose(strip_map_inv(strip), disk_points, atol=1e-12)
    with pytest.raises(DomainError):
        strip_map(1.5)


@pytest.mark.parametrize('phi, z', [(CAYLEY, 0.3 + 1.2j), (CAYLEY_INV, 0.2 - 0.4j),
                                    (STRIP_MAP, -0.1 + 0.3j), (STRIP_MAP_INV, 1.0 + 0.5j)])
def test_map_derivatives(phi, z):
    h = 1e-6
    numeric = (phi.forward(z + h) - phi.forward(z - h)) / (2.0 * h)
    assert phi.derivative(z) == pytest.approx(numeric, rel=1e-7)
    second = (phi.derivative(z + h) - phi.derivative(z - h)) / (2.0 * h)
    assert phi.derivative2(z) == pytest.approx(second, rel=1e-6)
    assert phi.inverse(phi(z)) == pytest.approx(z, abs=1e-12)


def test_affine():
    phi = affine(2.0, 1.0, 'half_plane')
    assert phi(1j) == pytest.approx(1.0 + 2.0j)
    assert phi.inverse(1.0 + 2.0j) == pytest.approx(1j)
    assert identity('strip')(0.3j) == pytest.approx(0.3j)
    with pytest.raises(ArgumentError):
        affine(-1.0, 0.0, 'half_plane')
    with pytest.raises(ArgumentError):
        affine(2.0, 0.0, 'strip')
    with pytest.raises(ArgumentError):
        affine(1.0, 0.5, 'disk')


def test_conjugate_generator_along_cayley(half_plane_points):
    parabolic = conjugate_generator(catalog('disk_parabolic'), CAYLEY)
    assert parabolic.domain is DomainKind.HALF_PLANE
    assert_allclose(parabolic.value(half_plane_points), half_plane_points, atol=1e-12)
    linear = conjugate_generator(catalog('disk_minus_z'), CAYLEY)
    assert_allclose(linear.value(half_plane_points), 0.5j * (half_plane_points ** 2 + 1.0), atol=1e-12)
    assert linear.tau == pytest.approx(1j)


def test_conjugate_generator_identity_and_mismatch():
    G = catalog('disk_minus_z')
    assert conjugate_generator(G, identity('disk')) is G
    with pytest.raises(ArgumentError):
        conjugate_generator(G, STRIP_MAP)


def test_conjugate_self_map():
    rotate = conjugate_self_map(lambda z: -z, CAYLEY)
    # -C(w) pulled back to the half-plane is w -> -1/w
    assert rotate(2.0 + 1.0j) == pytest.approx(-1.0 / (2.0 + 1.0j))


def pseudo_hyperbolic(z, tau):
    return np.abs((z - tau) / (1.0 - np.conj(tau) * z))


def points_in_region(region, rng, n=1000):
    r = region.radius * np.sqrt(rng.uniform(size=n)) * (1.0 - 1e-9)
    return region.center + r * np.exp(2j * np.pi * rng.uniform(size=n))


@pytest.mark.parametrize('tau, rho', [(0.0, 0.5), (0.5, 0.5), (-0.3 + 0.6j, 0.8), (0.9j, 0.2)])
def test_hyperbolic_disk_matches_set(rng, tau, rho):
    region = hyperbolic_disk(tau, rho)
    z = 0.999 * np.sqrt(rng.uniform(size=1000)) * np.exp(2j * np.pi * rng.uniform(size=1000))
    distance = pseudo_hyperbolic(z, tau)
    clear = np.abs(distance - rho) > 1e-9
    assert np.array_equal(region.contains(z)[clear], (distance < rho)[clear])


def test_hyperbolic_disk_invariant_under_semigroup(rng):
    tau = 0.3 + 0.2j
    G = CustomGenerator(lambda z: (tau - z) * (1.0 - np.conj(tau) * z), 'disk', tau=tau, vectorized=True)
    region = hyperbolic_disk(tau, 0.6)
    points = points_in_region(region, rng)
    images = np.array([ode_flow(G, 0.7, w) for w in points])
    assert np.all(region.contains(images))

    centered = hyperbolic_disk(0.0, 0.6)
    points = points_in_region(centered, rng)
    for t in (0.1, 1.0, 5.0):
        assert np.all(centered.contains(catalog('disk_minus_z').flow(t, points)))


@pytest.mark.parametrize('R', [0.5, 1.0, 2.0])
def test_horocycle_invariant_under_semigroup(rng, R):
    G = catalog('disk_parabolic')
    region = horocycle(G.tau, R)
    points = points_in_region(region, rng)
    for t in (0.5, 2.0):
        assert np.all(region.contains(G.flow(t, points)))


@pytest.mark.parametrize('name, params', [('disk_minus_z', {}), ('disk_hyperbolic', {'variant': 'G1'}),
                                          ('disk_parabolic', {}), ('disk_rotation_hyperbolic', {'angle': 1.0})])
def test_double_conjugation_round_trip(name, params):
    G = catalog(name, **params)
    back = conjugate_generator(conjugate_generator(G, CAYLEY), CAYLEY_INV)
    assert back.domain is DomainKind.DISK
    grid = radial_grid(16, 0.9)
    assert_allclose(back.value(grid), G.value(grid), rtol=1e-12, atol=1e-12)
    assert back.tau == pytest.approx(G.tau, abs=1e-12)
