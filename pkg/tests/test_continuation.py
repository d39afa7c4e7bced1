from __future__ import annotations

import cmath
import math

import pytest

from zeta_workbench import (
    AtSingularity,
    DegenerateShifts,
    DiracSpectrum,
    LaplaceSpectrum,
    MRep,
    ParityViolation,
    PathThroughSingularity,
    ResolventGrid,
    continued_super_logderiv,
    continued_sym_logderiv,
    log_zeta_by_path,
    partial_fraction_weights,
    residue_at,
    ruelle_factorization_check,
    singularity_catalog,
    square_spectrum,
    super_tail_log,
)
from conftest import power_family


# partial fractions -----------------------------------------------------------


def test_partial_fraction_weights_hand_values():
    w = partial_fraction_weights((1.0, 2.0))
    assert w[0] == pytest.approx(1.0 / 3.0)
    assert w[1] == pytest.approx(-1.0 / 3.0)
    w3 = partial_fraction_weights((1.0, 2.0, 3.0))
    assert w3[0] == pytest.approx(1.0 / 24.0)
    assert w3[1] == pytest.approx(-1.0 / 15.0)
    assert w3[2] == pytest.approx(1.0 / 40.0)


def test_partial_fraction_identity_n4():
    shifts = (1.0, 2.0, complex(1.5, 0.5), 3.0)
    weights = partial_fraction_weights(shifts)
    x = complex(0.7, 0.3)
    product = 1.0 + 0.0j
    for s in shifts:
        product /= x + s * s
    series = sum(w / (x + s * s) for w, s in zip(weights, shifts))
    assert series == pytest.approx(product, rel=1e-13)


def test_degenerate_shifts_rejected():
    with pytest.raises(DegenerateShifts):
        partial_fraction_weights((1.0, 1.0))
    with pytest.raises(DegenerateShifts):
        # opposite signs square to the same value
        partial_fraction_weights((2.0, -2.0))
    with pytest.raises(DegenerateShifts):
        ResolventGrid(shifts=(1.0, 1.0))


# continued log-derivatives ---------------------------------------------------


def test_continued_super_logderiv_hand_value(dirac_pm):
    # m_s(1) = 1: L^s(s) = 2i / (1 + s^2); at s = 2 this is 0.4i
    val = continued_super_logderiv(2.0, dirac_pm)
    assert val == pytest.approx(0.4j, abs=1e-14)


def test_continued_super_logderiv_refuses_poles(dirac_pm):
    with pytest.raises(AtSingularity):
        continued_super_logderiv(1j, dirac_pm)


def test_continued_sym_logderiv_hand_value():
    lap = LaplaceSpectrum(entries=((1.0, 3),))
    sigma = MRep(3, (1.0,))
    got = continued_sym_logderiv(2.0, lap, sigma, 1, volume=1.0)
    # 2 s m / (mu + s^2) - 4 pi Vol (k^2 - s^2)/(4 pi^2)
    expected = 2.0 * 2.0 * 3 / 5.0 - (1.0 - 4.0) / math.pi
    assert got == pytest.approx(expected, rel=1e-14)


# contour residues ------------------------------------------------------------


def test_residue_at_known_function():
    z0 = complex(0.3, -0.2)

    def f(z):
        return 5.0 / (z - z0) + cmath.cos(z)

    got = residue_at(f, z0, 0.4)
    assert got == pytest.approx(5.0, abs=1e-11)


def test_residue_of_analytic_function_is_zero():
    got = residue_at(cmath.exp, 0.1 + 0.2j, 0.5)
    assert abs(got) <= 1e-12


def test_residues_recover_multiplicities(dirac_pm):
    # at +i: m_s(1) = 2 - 1 = 1; at -i: -1
    got_plus = residue_at(lambda z: continued_super_logderiv(z, dirac_pm), 1j, 0.2)
    got_minus = residue_at(lambda z: continued_super_logderiv(z, dirac_pm), -1j, 0.2)
    assert got_plus == pytest.approx(1.0, abs=1e-10)
    assert got_minus == pytest.approx(-1.0, abs=1e-10)

    lap = square_spectrum(dirac_pm)
    sigma = MRep(3, (1.0,))

    def l_sym(z):
        return continued_sym_logderiv(z, lap, sigma, 1, volume=1.0)

    got = residue_at(l_sym, 1j, 0.2)
    assert got == pytest.approx(3.0, abs=1e-10)


def test_zero_mode_residue_doubles():
    dirac = DiracSpectrum(entries=((0.0, 2), (1.0, 1)))
    lap = square_spectrum(dirac)
    sigma = MRep(3, (1.0,))
    got = residue_at(
        lambda z: continued_sym_logderiv(z, lap, sigma, 1, volume=0.0), 0.0, 0.3
    )
    assert got == pytest.approx(4.0, abs=1e-10)


# singularity catalog ---------------------------------------------------------


def test_catalog_worked_example(dirac_pm):
    records = singularity_catalog(dirac_pm)
    table = {(r.zeta_kind, complex(r.location)): r.order for r in records}
    assert table == {
        ("super", 1j): 1,
        ("super", -1j): -1,
        ("symmetrized", 1j): 3,
        ("symmetrized", -1j): 3,
        ("selberg", 1j): 2,
        ("selberg", -1j): 1,
    }


def test_catalog_zero_mode():
    dirac = DiracSpectrum(entries=((0.0, 2), (1.0, 1)))
    records = singularity_catalog(dirac)
    table = {(r.zeta_kind, complex(r.location)): r.order for r in records}
    assert table == {
        ("selberg", 0j): 2,
        ("selberg", 1j): 1,
        ("symmetrized", 0j): 4,
        ("symmetrized", 1j): 1,
        ("symmetrized", -1j): 1,
        ("super", 1j): 1,
        ("super", -1j): -1,
    }


def test_catalog_rejects_parity_violation():
    dirac = DiracSpectrum(entries=((1.0, 1),))
    laplace = LaplaceSpectrum(entries=((1.0, 2),))
    with pytest.raises(ParityViolation):
        singularity_catalog(dirac, laplace)


def test_catalog_accepts_consistent_override():
    dirac = DiracSpectrum(entries=((1.0, 1),))
    laplace = LaplaceSpectrum(entries=((1.0, 3),))  # same parity as 1
    records = singularity_catalog(dirac, laplace)
    table = {(r.zeta_kind, complex(r.location)): r.order for r in records}
    assert table[("selberg", 1j)] == 2  # (1 + 3) / 2


def test_empty_catalog():
    assert singularity_catalog(DiracSpectrum(entries=())) == ()


# path continuation -----------------------------------------------------------


def test_super_tail_log_closed_form(dirac_pm):
    w = complex(5.0, 0.3)
    expected = 1.0 * cmath.log((w - 1j) / (w + 1j))
    assert super_tail_log(dirac_pm, w) == pytest.approx(expected, abs=1e-14)


def test_path_value_matches_closed_form(dirac_pm):
    s = complex(2.0)
    got = log_zeta_by_path(
        s,
        lambda z: continued_super_logderiv(z, dirac_pm),
        catalog=list(singularity_catalog(dirac_pm)),
        tail=lambda w: super_tail_log(dirac_pm, w),
    )
    want = super_tail_log(dirac_pm, s)
    assert got == pytest.approx(want, abs=1e-9)


def test_path_value_left_of_poles(dirac_pm):
    # the continued value at a negative real point: path along the real
    # axis never comes near +-i, so no detours fire
    s = complex(-1.5)
    got = log_zeta_by_path(
        s,
        lambda z: continued_super_logderiv(z, dirac_pm),
        catalog=list(singularity_catalog(dirac_pm)),
        tail=lambda w: super_tail_log(dirac_pm, w),
    )
    want = super_tail_log(dirac_pm, s)
    assert cmath.exp(got) == pytest.approx(cmath.exp(want), rel=1e-9)
    # log branches can only differ by whole turns
    turns = (got - want) / (2j * math.pi)
    assert abs(turns - round(turns.real)) < 1e-9


def test_detour_sides_differ_by_winding():
    # a tilted eigenvalue puts the pole at -0.05 + i, straight in the way
    # of the horizontal path at height 1
    dirac = DiracSpectrum(entries=((complex(1.0, 0.05), 1),))
    catalog = list(singularity_catalog(dirac))
    s = complex(-0.8, 1.0)

    def logderiv(z):
        return continued_super_logderiv(z, dirac)

    def tail(w):
        return super_tail_log(dirac, w)

    above = log_zeta_by_path(s, logderiv, catalog=catalog, detour_side="above", tail=tail)
    below = log_zeta_by_path(s, logderiv, catalog=catalog, detour_side="below", tail=tail)
    assert cmath.exp(above) == pytest.approx(cmath.exp(below), rel=1e-8)
    turns = (above - below) / (2j * math.pi)
    assert round(turns.real) != 0 or abs(turns) < 1e-9
    assert abs(turns - round(turns.real)) < 1e-8


def test_path_refuses_start_on_singularity(dirac_pm):
    with pytest.raises(PathThroughSingularity):
        log_zeta_by_path(
            1j + 0.01,
            lambda z: continued_super_logderiv(z, dirac_pm),
            catalog=list(singularity_catalog(dirac_pm)),
            tail=lambda w: super_tail_log(dirac_pm, w),
        )


# factorization ---------------------------------------------------------------


def test_ruelle_factorization_points(toy_spectrum):
    for k in (1.0, 0.5):
        sigma = MRep(3, (k,))
        for s in (complex(3.2), complex(3.8, 0.2)):
            lhs, rhs, gap = ruelle_factorization_check(s, sigma, None, toy_spectrum)
            assert gap <= 1e-9, (k, s, gap)


def test_ruelle_factorization_single_class():
    spec = power_family(1.2, 0.9, powers=3)
    sigma = MRep(3, (1.0,))
    lhs, rhs, gap = ruelle_factorization_check(complex(4.0), sigma, None, spec)
    assert gap <= 1e-12
