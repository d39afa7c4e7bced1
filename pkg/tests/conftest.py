from __future__ import annotations

import math

import numpy as np
import pytest

from zeta_workbench import (
    DiracSpectrum,
    GeodesicClass,
    GroupPresentation,
    LengthSpectrum,
    MRep,
    wrap_angle,
)


@pytest.fixture
def toy_spectrum():
    """Three primitive classes, incommensurate lengths, mixed angles."""
    return LengthSpectrum(
        dimension=3,
        cutoff=2.0,
        classes=(
            GeodesicClass(length=1.0, angle=0.7),
            GeodesicClass(length=1.3, angle=-2.1),
            GeodesicClass(length=1.7, angle=2.9),
        ),
        tolerance=1e-9,
        volume=1.0,
        source="toy",
    )


@pytest.fixture
def sigma_k1():
    return MRep(3, (1.0,))


def power_family(l0: float, theta0: float, powers: int, volume=None):
    classes = tuple(
        GeodesicClass(
            length=n * l0,
            angle=wrap_angle(n * theta0),
            multiplicity=n,
            primitive=n == 1,
        )
        for n in range(1, powers + 1)
    )
    return LengthSpectrum(
        dimension=3,
        cutoff=powers * l0,
        classes=classes,
        volume=volume,
        source="power family",
    )


@pytest.fixture
def cyclic_presentation():
    """diag(2, 1/2): one loxodromic generator, length 2 ln 2 per step."""
    g = np.array([[2.0, 0.0], [0.0, 0.5]], dtype=complex)
    return GroupPresentation(generators=(g,), names=("g",), includes_inverses=True)


def schottky_pair(ratio_a: complex = 3.0, ratio_b: complex = 2.5):
    """Two loxodromic generators with disjoint fixed-point pairs and
    distinct translation lengths.

    a fixes {0, inf}; b is a conjugated diagonal fixing {1/2, 1}.  For
    moduli >= 2.5 ping-pong applies and the group is free.
    """
    lam = complex(ratio_a)
    mu = complex(ratio_b)
    a = np.array([[lam, 0.0], [0.0, 1.0 / lam]], dtype=complex)
    m = np.array([[1.0, 1.0], [1.0, 2.0]], dtype=complex)
    m_inv = np.array([[2.0, -1.0], [-1.0, 1.0]], dtype=complex)
    b = m @ np.array([[mu, 0.0], [0.0, 1.0 / mu]], dtype=complex) @ m_inv
    return GroupPresentation(generators=(a, b), names=("a", "b"))


@pytest.fixture
def free_two_generator():
    return schottky_pair(3.0 * np.exp(0.4j), 2.5 * np.exp(-0.7j))


@pytest.fixture
def dirac_pm():
    """The worked catalog example: m(1) = 2, m(-1) = 1."""
    return DiracSpectrum(entries=((1.0, 2), (-1.0, 1)))


def assert_close(a, b, tol=1e-12, msg=""):
    gap = abs(a - b)
    assert gap <= tol, f"{msg} gap {gap:g} exceeds {tol:g} ({a} vs {b})"


TWO_LN_2 = 2.0 * math.log(2.0)
