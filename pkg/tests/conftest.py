import numpy as np
import pytest

from resolventlab.domains.domains import DomainKind, sample_points
from resolventlab.generators.catalog import catalog


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def disk_points():
    return sample_points(DomainKind.DISK, 12, seed=7)


@pytest.fixture
def half_plane_points():
    return sample_points(DomainKind.HALF_PLANE, 12, seed=7)


@pytest.fixture
def strip_points():
    return sample_points(DomainKind.STRIP, 12, seed=7)


@pytest.fixture
def g1():
    return catalog('disk_hyperbolic', variant='G1')


@pytest.fixture
def g2():
    return catalog('disk_hyperbolic', variant='G2')


@pytest.fixture
def minus_z():
    return catalog('disk_minus_z')


@pytest.fixture
def quiet_log(monkeypatch):
    monkeypatch.setenv('RESOLVENTLAB_LOG', 'error')
