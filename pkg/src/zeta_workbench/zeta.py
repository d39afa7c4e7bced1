"""Geodesic class-sum evaluation of the five zeta functions.

Every zeta here is evaluated through its logarithm as a sum over the
nontrivial conjugacy classes of the supplied spectrum.  Writing l for the
class length, theta for its holonomy angle, n for its power multiplicity,
rho for (d-1)/2 and det for det(Id - Ad|nbar):

    log Z(s)   = - sum  (1/n) trchi * trsigma * exp(-(s+rho) l) / det
    log R(s)   = - sum  (1/n) trchi * trsigma * exp(-s l)

The two log forms are the termwise antiderivatives (in s) of the standard
logarithmic-derivative sums

    L_S(s)  = sum (l/n) L(gamma; sigma + w sigma) exp(-s l)
    L^s(s)  = sum (l/n) L(gamma; sigma - w sigma) exp(-s l)
    L(gamma; sigma) = trchi * trsigma * exp(-rho l) / det

and both vanish as Re(s) grows, which pins the integration constant.
The symmetrized, super and super-Ruelle variants are the obvious sums and
differences of the base sums at sigma and its sign-flipped partner.

Sums are only evaluated above a model-based convergence abscissa derived
from an exponential geodesic-count model N(L) <= C exp(g L); requests
below it are refused.  Tail bounds use the same model and are estimates,
not certificates.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceRegionError, InvariantViolation, Unsupported
from .reps import (
    GammaRep,
    MRep,
    ad_nbar_det,
    character_chi,
    character_sigma,
    require_case_b,
    rho_norm,
    weyl_action,
)
from .spectra import GeodesicClass, LengthSpectrum, TruncatedValue

__all__ = [
    "ZetaRequest",
    "convergence_abscissa",
    "log_selberg",
    "log_ruelle",
    "log_symmetrized",
    "log_super",
    "log_super_ruelle",
    "log_derivative_super",
    "log_derivative_symmetrized",
    "log_zeta",
]

KINDS = ("selberg", "ruelle", "symmetrized", "super", "super_ruelle")


@dataclass(frozen=True)
class ZetaRequest:
    s: complex
    sigma: MRep
    spectrum: LengthSpectrum
    kind: str = "selberg"
    chi: GammaRep | None = None
    growth_constant: float | None = None  # default 2*rho = d-1

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        if self.kind not in KINDS:
            raise InvariantViolation(f"unknown zeta kind {self.kind!r}")
        if self.spectrum.dimension % 2 == 0:
            raise InvariantViolation("spectrum dimension must be odd")
        if self.kind in ("symmetrized", "super", "super_ruelle"):
            require_case_b(self.sigma)
        if self.growth_constant is not None and not (self.growth_constant > 0):
            raise InvariantViolation("growth_constant must be positive")

    @property
    def growth(self) -> float:
        if self.growth_constant is not None:
            return self.growth_constant
        return float(self.spectrum.dimension - 1)


def convergence_abscissa(kind: str, growth: float, rho: float) -> float:
    """Model abscissa: growth - rho for the Selberg-type sums, growth for
    the plain geodesic sums (no exp(-rho l) damping there)."""
    if kind in ("selberg", "symmetrized", "super"):
        return growth - rho
    return growth


def _check_region(s: complex, kind: str, growth: float, rho: float) -> float:
    a = convergence_abscissa(kind, growth, rho)
    if s.real <= a:
        raise ConvergenceRegionError(s, a)
    return a


def _class_sigma_trace(c: GeodesicClass, sigma: MRep, dimension: int) -> complex:
    if c.sigma_trace is not None:
        return c.sigma_trace
    if dimension != 3:
        raise Unsupported(
            "class character values beyond dimension 3 must be supplied as "
            "per-class sigma_trace data"
        )
    return character_sigma(sigma, c.angle)


def _class_chi_traces(spectrum: LengthSpectrum, chi: GammaRep | None) -> np.ndarray:
    if chi is None:
        return np.ones(len(spectrum.classes), dtype=complex)
    traces = np.empty(len(spectrum.classes), dtype=complex)
    for i, c in enumerate(spectrum.classes):
        if c.word is None:
            raise InvariantViolation(
                f"class {i} carries no word; a nontrivial twist needs words"
            )
        traces[i] = character_chi(chi, c.word)
    return traces


# tail model helpers -------------------------------------------------------


def _growth_prefactor(spectrum: LengthSpectrum, growth: float) -> float:
    """Least-squares C for the count model N(L) = C exp(growth L)."""
    if not spectrum.classes:
        return 0.0
    logs = [
        math.log(i + 1) - growth * c.length for i, c in enumerate(spectrum.classes)
    ]
    return math.exp(sum(logs) / len(logs))


def _tail_integral(p: int, alpha: float, L: float) -> float:
    """Closed form of integral_L^inf u^p exp(-alpha u) du for p in {0, 1}."""
    if p == 0:
        return math.exp(-alpha * L) / alpha
    return math.exp(-alpha * L) * (L / alpha + 1.0 / (alpha * alpha))


def _chi_bound(spectrum: LengthSpectrum, chi: GammaRep | None, traces: np.ndarray) -> float:
    if chi is None:
        return 1.0
    observed = float(np.max(np.abs(traces))) if len(traces) else 0.0
    return max(float(chi.dimension), observed)


def _tail_bound(
    spectrum: LengthSpectrum,
    growth: float,
    beta: float,
    chi_bound: float,
    sigma_bound: float,
    with_det: bool,
    with_length_factor: bool,
) -> float:
    """Model bound on the classes beyond the cutoff.

    beta is the exponential decay rate of one term; the count model
    contributes C g exp(g u) du, so the tail decays like exp(-(beta-g) L).
    """
    if not spectrum.classes:
        return 0.0
    alpha = beta - growth
    if alpha <= 0:  # guarded by the abscissa check; belt and braces
        return math.inf
    L = spectrum.cutoff
    C = _growth_prefactor(spectrum, growth)
    # det(l, theta) >= (1 - exp(-l))^2, decreasing in -l, so the cutoff
    # value floors every omitted term
    det_floor = (1.0 - math.exp(-L)) ** 2 if with_det else 1.0
    base = chi_bound * sigma_bound * C * growth / det_floor
    return base * _tail_integral(1 if with_length_factor else 0, alpha, L)


# core sums ----------------------------------------------------------------


def _base_log_sum(
    s: complex,
    sigma: MRep,
    spectrum: LengthSpectrum,
    chi: GammaRep | None,
    growth: float,
    selberg_type: bool,
) -> TruncatedValue:
    """Shared worker for log Z and log R at a single weight."""
    d = spectrum.dimension
    rho = rho_norm(d)
    if not spectrum.classes:
        # empty sum: nothing to converge, nothing omitted
        return TruncatedValue(0.0, 0.0, 0)
    kind = "selberg" if selberg_type else "ruelle"
    _check_region(s, kind, growth, rho)
    if selberg_type and d != 3:
        raise Unsupported(
            "the adjoint determinant factor is implemented for dimension 3 only"
        )

    chi_traces = _class_chi_traces(spectrum, chi)
    total = 0.0 + 0.0j
    sigma_max = 0.0
    for c, trchi in zip(spectrum.classes, chi_traces):
        trsigma = _class_sigma_trace(c, sigma, d)
        sigma_max = max(sigma_max, abs(trsigma))
        if selberg_type:
            term = (
                trchi
                * trsigma
                * cmath.exp(-(s + rho) * c.length)
                / (c.multiplicity * ad_nbar_det(c.length, c.angle))
            )
        else:
            term = trchi * trsigma * cmath.exp(-s * c.length) / c.multiplicity
        total -= term

    beta = s.real + (rho if selberg_type else 0.0)
    tail = _tail_bound(
        spectrum,
        growth,
        beta,
        _chi_bound(spectrum, chi, chi_traces),
        max(sigma_max, 1.0),
        with_det=selberg_type,
        with_length_factor=False,
    )
    return TruncatedValue(total, tail, len(spectrum.classes))


def log_selberg(req: ZetaRequest) -> TruncatedValue:
    """Class-sum logarithm of the twisted Selberg-type zeta at req.s."""
    return _base_log_sum(req.s, req.sigma, req.spectrum, req.chi, req.growth, True)


def log_ruelle(req: ZetaRequest) -> TruncatedValue:
    """Class-sum logarithm of the twisted Ruelle-type zeta at req.s."""
    return _base_log_sum(req.s, req.sigma, req.spectrum, req.chi, req.growth, False)


def _combine(a: TruncatedValue, b: TruncatedValue, sign: int) -> TruncatedValue:
    return TruncatedValue(
        a.value + sign * b.value,
        a.tail_bound + b.tail_bound,
        max(a.terms_used, b.terms_used),
    )


def log_symmetrized(req: ZetaRequest) -> TruncatedValue:
    """log of Z(sigma) * Z(w sigma)."""
    require_case_b(req.sigma)
    a = _base_log_sum(req.s, req.sigma, req.spectrum, req.chi, req.growth, True)
    b = _base_log_sum(
        req.s, weyl_action(req.sigma), req.spectrum, req.chi, req.growth, True
    )
    return _combine(a, b, +1)


def log_super(req: ZetaRequest) -> TruncatedValue:
    """log of Z(sigma) / Z(w sigma)."""
    require_case_b(req.sigma)
    a = _base_log_sum(req.s, req.sigma, req.spectrum, req.chi, req.growth, True)
    b = _base_log_sum(
        req.s, weyl_action(req.sigma), req.spectrum, req.chi, req.growth, True
    )
    return _combine(a, b, -1)


def log_super_ruelle(req: ZetaRequest) -> TruncatedValue:
    """log of R(sigma) / R(w sigma)."""
    require_case_b(req.sigma)
    a = _base_log_sum(req.s, req.sigma, req.spectrum, req.chi, req.growth, False)
    b = _base_log_sum(
        req.s, weyl_action(req.sigma), req.spectrum, req.chi, req.growth, False
    )
    return _combine(a, b, -1)


_DISPATCH = {
    "selberg": log_selberg,
    "ruelle": log_ruelle,
    "symmetrized": log_symmetrized,
    "super": log_super,
    "super_ruelle": log_super_ruelle,
}


def log_zeta(req: ZetaRequest) -> TruncatedValue:
    return _DISPATCH[req.kind](req)


# logarithmic derivatives --------------------------------------------------


def _log_derivative(
    s: complex,
    sigma: MRep,
    chi: GammaRep | None,
    spectrum: LengthSpectrum,
    growth: float,
    relative_sign: int,
) -> TruncatedValue:
    """Dirichlet sum sum (l/n) L(gamma; sigma +- w sigma) exp(-s l)."""
    d = spectrum.dimension
    rho = rho_norm(d)
    if not spectrum.classes:
        return TruncatedValue(0.0, 0.0, 0)
    if d != 3:
        raise Unsupported(
            "the adjoint determinant factor is implemented for dimension 3 only"
        )
    _check_region(s, "selberg", growth, rho)
    wsigma = weyl_action(sigma)
    chi_traces = _class_chi_traces(spectrum, chi)
    total = 0.0 + 0.0j
    sigma_max = 0.0
    for c, trchi in zip(spectrum.classes, chi_traces):
        pair = character_sigma(sigma, c.angle) + relative_sign * character_sigma(
            wsigma, c.angle
        )
        sigma_max = max(sigma_max, abs(pair))
        lsym = trchi * pair * math.exp(-rho * c.length) / ad_nbar_det(c.length, c.angle)
        total += (c.length / c.multiplicity) * lsym * cmath.exp(-s * c.length)

    tail = _tail_bound(
        spectrum,
        growth,
        s.real + rho,
        _chi_bound(spectrum, chi, chi_traces),
        max(sigma_max, 1.0),
        with_det=True,
        with_length_factor=True,
    )
    return TruncatedValue(total, tail, len(spectrum.classes))


def log_derivative_super(
    s: complex,
    sigma: MRep,
    chi: GammaRep | None,
    spectrum: LengthSpectrum,
    growth_constant: float | None = None,
) -> TruncatedValue:
    """d/ds of log(Z(sigma)/Z(w sigma)) as a Dirichlet sum."""
    require_case_b(sigma)
    growth = growth_constant if growth_constant is not None else float(
        spectrum.dimension - 1
    )
    return _log_derivative(s, sigma, chi, spectrum, growth, -1)


def log_derivative_symmetrized(
    s: complex,
    sigma: MRep,
    chi: GammaRep | None,
    spectrum: LengthSpectrum,
    growth_constant: float | None = None,
) -> TruncatedValue:
    """d/ds of log(Z(sigma) * Z(w sigma)) as a Dirichlet sum."""
    require_case_b(sigma)
    growth = growth_constant if growth_constant is not None else float(
        spectrum.dimension - 1
    )
    return _log_derivative(s, sigma, chi, spectrum, growth, +1)
