from __future__ import annotations

import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zeta_workbench import (
    CaseAError,
    GammaRep,
    InvariantViolation,
    MRep,
    SchemaError,
    UnknownSymbol,
    Unsupported,
    ad_nbar_det,
    c_shift,
    case_of,
    character_chi,
    character_sigma,
    parse_gamma_rep,
    plancherel,
    rho_m,
    rho_norm,
    serialize_gamma_rep,
    spin_minus,
    spin_plus,
    sym_power_trace,
    trivial_gamma_rep,
    weyl_action,
)


def test_rho_values():
    assert rho_norm(3) == 1.0
    assert rho_norm(5) == 2.0
    assert rho_m(3) == (0.0,)
    assert rho_m(5) == (1.0, 0.0)


def test_mrep_validation():
    MRep(3, (2.0,))
    MRep(3, (0.5,))
    MRep(5, (2.0, 1.0))
    with pytest.raises(InvariantViolation):
        MRep(3, (1.0, 2.0))  # wrong rank for d = 3
    with pytest.raises(InvariantViolation):
        MRep(5, (1.0, 2.0))  # not weakly decreasing
    with pytest.raises(InvariantViolation):
        MRep(5, (1.5, 1.0))  # mixed integrality
    with pytest.raises(InvariantViolation):
        MRep(4, (1.0,))  # even d


def test_weyl_action_and_case():
    sigma = MRep(3, (2.0,))
    w = weyl_action(sigma)
    assert w.weight == (-2.0,)
    assert weyl_action(w) == sigma
    assert case_of(sigma) == "case_b"
    assert case_of(MRep(3, (0.0,))) == "case_a"
    assert case_of(MRep(5, (3.0, 0.0))) == "case_a"


def test_spin_representations():
    assert spin_plus(3).weight == (0.5,)
    assert spin_minus(3).weight == (-0.5,)
    assert spin_plus(5).weight == (0.5, 0.5)
    assert spin_minus(5).weight == (0.5, -0.5)
    assert weyl_action(spin_plus(3)) == spin_minus(3)


def test_character_sigma_is_unit_circle():
    sigma = MRep(3, (2.0,))
    value = character_sigma(sigma, 0.3)
    assert value == pytest.approx(cmath.exp(2j * 0.3))
    with pytest.raises(Unsupported):
        character_sigma(MRep(5, (1.0, 1.0)), 0.3)


def test_c_shift_is_squared_weight_minus_one():
    assert c_shift(MRep(3, (0.0,))) == pytest.approx(-1.0)
    assert c_shift(MRep(3, (1.0,))) == pytest.approx(0.0)
    assert c_shift(MRep(3, (2.0,))) == pytest.approx(3.0)
    assert c_shift(MRep(3, (0.5,))) == pytest.approx(-0.75)


# ad_nbar_det and symmetric-power traces -------------------------------------


def test_ad_nbar_det_oracle():
    # det(1 - e^{-l} R(theta)) over the 2-dim contracting slot:
    # eigenvalues e^{-l} e^{+-i theta}
    l, theta = 0.9, 1.1
    expected = (1 - cmath.exp(-l + 1j * theta)) * (1 - cmath.exp(-l - 1j * theta))
    assert ad_nbar_det(l, theta) == pytest.approx(expected.real)
    assert abs(expected.imag) < 1e-15


@given(
    st.floats(0.2, 5.0, allow_nan=False),
    st.floats(-math.pi, math.pi, allow_nan=False),
)
def test_ad_nbar_det_positive(l, theta):
    assert ad_nbar_det(l, theta) > 0.0


def test_sym_power_trace_oracle():
    # trace of Sym^k of diag(e^{i theta}, e^{-i theta}) scaled by e^{-l}:
    # sum over a+b = k of e^{i (a-b) theta} e^{-k l}
    l, theta = 0.7, 0.4
    for k in range(6):
        brute = sum(
            cmath.exp(1j * (a - (k - a)) * theta) for a in range(k + 1)
        ) * math.exp(-k * l)
        assert sym_power_trace(k, l, theta) == pytest.approx(brute, abs=1e-14)


@given(
    st.floats(0.3, 4.0, allow_nan=False),
    st.floats(-math.pi, math.pi, allow_nan=False),
)
def test_geometric_series_of_sym_traces(l, theta):
    # sum_k tr Sym^k = 1 / det(1 - contracting block)
    total = sum(sym_power_trace(k, l, theta) for k in range(200))
    assert total.real == pytest.approx(1.0 / ad_nbar_det(l, theta), rel=1e-10)


# Plancherel polynomial -------------------------------------------------------


def test_plancherel_for_weight_k():
    sigma = MRep(3, (2.0,))
    poly = plancherel(sigma)
    lam = 1.3
    expected = (lam * lam + 4.0) / (4.0 * math.pi**2)
    assert poly.at_ilambda(lam) == pytest.approx(expected)
    # at_s evaluates the same polynomial at lambda = -i s
    s = complex(0.8, 0.1)
    assert poly.at_s(s) == pytest.approx(poly.at_ilambda(-1j * s))


def test_plancherel_rejects_higher_dimensions_without_override():
    with pytest.raises(Unsupported):
        plancherel(MRep(5, (1.0, 1.0)))


# flat-bundle twist -----------------------------------------------------------


def test_gamma_rep_validation():
    good = np.array([[0.0, 1.0], [1.0, 0.0]])
    GammaRep(dimension=2, images={"a": good})
    with pytest.raises(InvariantViolation):
        GammaRep(dimension=2, images={"a": np.zeros((2, 2))})
    with pytest.raises(InvariantViolation):
        GammaRep(dimension=2, images={"a": np.eye(3)})


def test_character_chi_trivial_and_products():
    assert character_chi(None, "abc") == 1.0 + 0.0j
    chi = trivial_gamma_rep(dimension=2, names=("a", "b"))
    assert character_chi(chi, "ab") == pytest.approx(2.0 + 0.0j)

    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    chi2 = GammaRep(dimension=2, images={"a": swap, "b": np.eye(2)})
    assert character_chi(chi2, "a") == pytest.approx(0.0)
    assert character_chi(chi2, "aa") == pytest.approx(2.0)
    # inverse symbols fall back to the matrix inverse
    assert character_chi(chi2, "A") == pytest.approx(0.0)
    with pytest.raises(UnknownSymbol):
        character_chi(chi2, "z")


@given(st.text(alphabet="ab", min_size=1, max_size=6), st.integers(0, 5))
def test_character_chi_cyclic_invariance(word, rot):
    mats = {
        "a": np.array([[1.0, 1.0], [0.0, 1.0]]),
        "b": np.array([[1.0, 0.0], [2.0, 1.0]]),
    }
    chi = GammaRep(dimension=2, images=mats)
    r = rot % len(word)
    rotated = word[r:] + word[:r]
    assert character_chi(chi, rotated) == pytest.approx(
        character_chi(chi, word), abs=1e-9
    )


def test_gamma_rep_round_trip():
    chi = GammaRep(
        dimension=2,
        images={
            "a": np.array([[0.0, 1.0], [1.0, 0.0]]),
            "b": np.array([[1.0, 1.0], [0.0, 1.0]]),
        },
    )
    doc = serialize_gamma_rep(chi)
    back = parse_gamma_rep(doc)
    assert back.dimension == 2
    for name in ("a", "b"):
        np.testing.assert_allclose(back.image_of_symbol(name), chi.image_of_symbol(name))
    with pytest.raises(SchemaError):
        parse_gamma_rep({"dimension": 2})
