"""Shared example systems used across the test suite."""

import pytest

from sphsys.roots import RootSystem
from sphsys.system import SphericalSystem


def make(name, sp, sigma, acolors):
    return SphericalSystem.make(RootSystem.parse(name), sp, sigma, acolors)


@pytest.fixture
def a1_a1():
    """a(1) on A1: one simple spherical root, two colors."""
    return make("A1", (), [(1,)], [({1}, (1,)), ({1}, (1,))])


@pytest.fixture
def two_a_a1():
    """2a on A1."""
    return make("A1", (), [(2,)], [])


@pytest.fixture
def aa_a1xa1():
    """aa on A1xA1."""
    return make("A1xA1", (), [(1, 1)], [])


@pytest.fixture
def comb2_a2():
    """The positive 2-comb on A2: Sigma = S, one shared color."""
    return make(
        "A2",
        (),
        [(1, 0), (0, 1)],
        [({1, 2}, (1, 1)), ({1}, (1, -2)), ({2}, (-2, 1))],
    )


@pytest.fixture
def g2_gpp():
    """The unnamed G2 root alpha1+alpha2 as a rank-1 system."""
    return make("G2", (), [(1, 1)], [])


@pytest.fixture
def a3_cuspidal():
    """a(3) on A3."""
    return make("A3", {2}, [(1, 1, 1)], [])
