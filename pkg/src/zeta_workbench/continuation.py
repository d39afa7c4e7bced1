"""Meromorphic continuation from spectral data.

The geodesic sums of the zeta logs converge only in a half-plane.  Their
logarithmic derivatives, however, have closed meromorphic forms in terms
of operator spectra:

    L_super(s) = 2i sum_k m(lam_k) lam_k / (lam_k^2 + s^2)
    L_sym(s)   = 2s sum_k m(mu_k) / (mu_k + s^2)
                 - 4 pi dim(V_chi) Vol P(s)

These are rational (plus an entire polynomial) and defined on all of C,
with simple poles at s = +-i lam_k and s = +-i sqrt(mu_k) whose residues
are the signed and plain algebraic multiplicities.  Everything else here
is bookkeeping on top: partial-fraction resolvent weights, contour-based
residue extraction, a catalog of singularities with integer orders, and
log-zeta recovery by integrating a continued log-derivative along a path
to the right half-plane where the logarithm vanishes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import (
    AtSingularity,
    DegenerateShifts,
    InvariantViolation,
    NoConvergence,
    ParityViolation,
    PathThroughSingularity,
)
from .reps import GammaRep, MRep, PlancherelPoly, plancherel
from .spectra import (
    DiracSpectrum,
    LaplaceSpectrum,
    SingularityRecord,
    square_spectrum,
    super_multiplicity,
)

__all__ = [
    "ResolventGrid",
    "partial_fraction_weights",
    "continued_super_logderiv",
    "continued_sym_logderiv",
    "residue_at",
    "singularity_catalog",
    "log_zeta_by_path",
    "super_tail_log",
    "ruelle_factorization_check",
]

_SINGULARITY_EPS = 1e-12


@dataclass(frozen=True)
class ResolventGrid:
    """Distinct complex shifts with pairwise distinct squares."""

    shifts: tuple[complex, ...]

    def __post_init__(self):
        shifts = tuple(complex(s) for s in self.shifts)
        object.__setattr__(self, "shifts", shifts)
        if not shifts:
            raise InvariantViolation("need at least one shift")
        for i, a in enumerate(shifts):
            for b in shifts[i + 1 :]:
                if a == b or abs(a * a - b * b) < 1e-14:
                    raise DegenerateShifts(
                        f"shifts {a} and {b} coincide or have coinciding squares"
                    )


def partial_fraction_weights(shifts: ResolventGrid | tuple[complex, ...]) -> list[complex]:
    """Weights w_i = prod_{j != i} 1/(s_j^2 - s_i^2).

    They satisfy prod_i 1/(x + s_i^2) = sum_i w_i/(x + s_i^2) identically,
    which reduces a product of resolvents to a sum of single resolvents.
    """
    grid = shifts if isinstance(shifts, ResolventGrid) else ResolventGrid(tuple(shifts))
    sq = [s * s for s in grid.shifts]
    weights = []
    for i, si2 in enumerate(sq):
        w = 1.0 + 0.0j
        for j, sj2 in enumerate(sq):
            if j != i:
                w /= sj2 - si2
        weights.append(w)
    return weights


# ---------------------------------------------------------------------------
# continued logarithmic derivatives


def continued_super_logderiv(s: complex, dirac: DiracSpectrum) -> complex:
    """2i sum m(lam) lam / (lam^2 + s^2); poles +-i lam, residues +-m_s."""
    s = complex(s)
    for ev, _ in dirac.entries:
        if abs(s - 1j * ev) < _SINGULARITY_EPS or abs(s + 1j * ev) < _SINGULARITY_EPS:
            raise AtSingularity(f"s = {s} sits on a pole", location=s)
    return 2j * sum(m * ev / (ev * ev + s * s) for ev, m in dirac.entries)


def continued_sym_logderiv(
    s: complex,
    laplace: LaplaceSpectrum,
    sigma: MRep,
    chi: GammaRep | int | None,
    volume: float,
    poly: PlancherelPoly | None = None,
) -> complex:
    """2s sum m(mu)/(mu + s^2) minus the entire density term.

    chi may be a representation or just its dimension; volume 0 disables
    the polynomial term explicitly.
    """
    s = complex(s)
    for mu, _ in laplace.entries:
        root = 1j * cmath.sqrt(mu)
        if abs(s - root) < _SINGULARITY_EPS or abs(s + root) < _SINGULARITY_EPS:
            raise AtSingularity(f"s = {s} sits on a pole", location=s)
    rational = 2.0 * s * sum(m / (mu + s * s) for mu, m in laplace.entries)
    if volume is None:
        from .errors import MissingVolume

        raise MissingVolume("the density term needs a volume (0 to disable)")
    dim_chi = chi.dimension if isinstance(chi, GammaRep) else (chi or 1)
    q = poly if poly is not None else plancherel(sigma)
    return rational - 4.0 * math.pi * dim_chi * volume * q.at_s(s)


# ---------------------------------------------------------------------------
# residues


def residue_at(f, s0: complex, radius: float) -> complex:
    """(1/2 pi i) contour integral of f on the circle |s - s0| = radius.

    Trapezoidal quadrature on the circle converges exponentially for
    integrands analytic in an annulus; nodes double until two successive
    values agree to 1e-10.
    """
    if not (radius > 0):
        raise InvariantViolation("radius must be positive")
    s0 = complex(s0)
    previous = None
    n = 16
    while n <= 1 << 17:
        angles = 2.0 * math.pi * np.arange(n) / n
        nodes = s0 + radius * np.exp(1j * angles)
        # (1/2 pi i) integral f dz with dz = i (z - s0) dphi
        total = sum(f(z) * (z - s0) for z in nodes) / n
        if previous is not None and abs(total - previous) < 1e-10:
            return complex(total)
        previous = total
        n *= 2
    raise NoConvergence(
        f"contour values at {s0} did not settle (last delta around "
        f"{abs(total - previous):g})"
    )


# ---------------------------------------------------------------------------
# singularity catalog


def _half(x: int, context: str) -> int:
    if x % 2 != 0:
        raise ParityViolation(f"odd order sum in {context}")
    return x // 2


def singularity_catalog(
    dirac: DiracSpectrum,
    laplace: LaplaceSpectrum | None = None,
) -> tuple[SingularityRecord, ...]:
    """Locations and integer orders for the super, symmetrized and plain
    Selberg-type zetas, from spectral data alone.

    laplace defaults to the squared first-order spectrum.  Supplying an
    independent second-order spectrum is allowed; the catalog then checks
    the grading parity m_s(lam) = m(lam^2) mod 2 at every location and
    refuses data that no graded operator pair could produce.
    """
    lap = laplace if laplace is not None else square_spectrum(dirac)

    # work over the set of distinct "frequencies" nu: location is i*nu
    freqs: list[complex] = []

    def push(nu: complex) -> None:
        for known in freqs:
            if abs(known - nu) < _SINGULARITY_EPS:
                return
        freqs.append(nu)

    for ev, _ in dirac.entries:
        push(complex(ev))
        push(-complex(ev))
    for mu, _ in lap.entries:
        root = cmath.sqrt(mu)
        push(root)
        push(-root)

    def m_dirac(nu: complex) -> int:
        return dirac.multiplicity(nu, tol=_SINGULARITY_EPS)

    def m_lap(mu: complex) -> int:
        for known, m in lap.entries:
            if abs(known - mu) < _SINGULARITY_EPS:
                return m
        return 0

    records: list[SingularityRecord] = []
    for nu in freqs:
        m_super = m_dirac(nu) - m_dirac(-nu)
        mu = nu * nu
        m_second = m_lap(mu)
        location = 1j * nu
        at_zero = abs(nu) < _SINGULARITY_EPS
        if at_zero:
            # the signed multiplicity vanishes identically at zero; the
            # second-order residue there is 2 m(0), giving plain order m(0)
            order_sym = 2 * m_second
            order_z = m_second
        else:
            if (m_super - m_second) % 2 != 0:
                raise ParityViolation(
                    f"signed multiplicity {m_super} and squared multiplicity "
                    f"{m_second} disagree mod 2 at eigenvalue {nu}",
                    eigenvalue=nu,
                )
            order_sym = m_second
            order_z = _half(m_super + order_sym, f"plain order at {location}")
        if m_super != 0:
            records.append(SingularityRecord(location, m_super, "super"))
        if order_sym != 0:
            records.append(SingularityRecord(location, order_sym, "symmetrized"))
        if order_z != 0:
            records.append(SingularityRecord(location, order_z, "selberg"))

    records.sort(key=lambda r: (r.zeta_kind, r.location.real, r.location.imag))
    return tuple(records)


# ---------------------------------------------------------------------------
# log zeta along a path


def super_tail_log(dirac: DiracSpectrum, w: complex) -> complex:
    """Closed form of -integral_w^inf of the continued super log-derivative
    along the rightward horizontal ray, on the principal branch.

    Valid once Re(w) dominates every |lam|; each eigenvalue contributes
    m * Log((w - i lam)/(w + i lam)), which decays like 1/w.
    """
    total = 0.0 + 0.0j
    for ev, m in dirac.entries:
        total += m * cmath.log((w - 1j * ev) / (w + 1j * ev))
    return total


def _segment_integral(f, a: complex, b: complex, abs_tol: float = 1e-12) -> complex:
    direction = b - a

    def real_part(x: float) -> float:
        return (f(a + x * direction) * direction).real

    def imag_part(x: float) -> float:
        return (f(a + x * direction) * direction).imag

    re, _ = quad(real_part, 0.0, 1.0, epsabs=abs_tol, limit=400)
    im, _ = quad(imag_part, 0.0, 1.0, epsabs=abs_tol, limit=400)
    return complex(re, im)


def _arc_integral(
    f, center: complex, radius: float, phi_from: float, phi_to: float
) -> complex:
    def real_part(phi: float) -> float:
        z = center + radius * cmath.exp(1j * phi)
        return (f(z) * 1j * radius * cmath.exp(1j * phi)).real

    def imag_part(phi: float) -> float:
        z = center + radius * cmath.exp(1j * phi)
        return (f(z) * 1j * radius * cmath.exp(1j * phi)).imag

    re, _ = quad(real_part, phi_from, phi_to, epsabs=1e-12, limit=200)
    im, _ = quad(imag_part, phi_from, phi_to, epsabs=1e-12, limit=200)
    return complex(re, im)


def log_zeta_by_path(
    s: complex,
    logderiv,
    catalog: list[SingularityRecord] | None = None,
    detour_radius: float = 0.1,
    detour_side: str = "above",
    tail=None,
    s_max: complex | None = None,
) -> complex:
    """-integral_s^inf of a continued log-derivative along a rightward ray.

    Exponentiating the result gives the continued zeta value; different
    detour sides change the log by 2 pi i times the enclosed integer
    order, never the exponential.  Catalogued singularities close to the
    ray are avoided by semicircular detours of detour_radius on
    detour_side ('above' or 'below').

    tail(w) must return the remaining -integral_w^inf; when omitted, the
    ray is extended by doubling until |logderiv| * |w| falls below 1e-12,
    which covers integrands with quadratic decay.
    """
    s = complex(s)
    locations = [r.location for r in (catalog or [])]
    for loc in locations:
        if abs(s - loc) < detour_radius:
            raise PathThroughSingularity(
                f"start point {s} is within {detour_radius} of singularity {loc}"
            )

    if s_max is None:
        reach = max(
            [abs(loc) for loc in locations] + [abs(s), 1.0]
        )
        s_max = complex(max(20.0, 5.0 * reach), s.imag)
    else:
        s_max = complex(s_max)

    if tail is None:
        w = s_max
        for _ in range(60):
            if abs(logderiv(w)) * abs(w) < 1e-12:
                break
            w = complex(w.real * 2.0, w.imag)
        else:
            raise NoConvergence(
                "log-derivative does not decay along the ray; no path tail"
            )
        s_max = w
        tail_value = 0.0 + 0.0j
    else:
        tail_value = tail(s_max)

    y = s.imag
    near_ray = sorted(
        (
            loc
            for loc in locations
            if abs(loc.imag - y) < detour_radius
            and s.real < loc.real < s_max.real
        ),
        key=lambda z: z.real,
    )
    # records of several zeta kinds share locations; detour each point once
    blockers: list[complex] = []
    for loc in near_ray:
        if not blockers or abs(loc - blockers[-1]) > 1e-9:
            blockers.append(loc)

    sign = +1.0 if detour_side == "above" else -1.0
    total = 0.0 + 0.0j
    cursor = s
    for loc in blockers:
        # straight run up to the detour circle, then a half circle over it
        entry = complex(loc.real - detour_radius, y)
        exit_ = complex(loc.real + detour_radius, y)
        if entry.real < cursor.real:
            raise PathThroughSingularity(
                f"detour circles around {loc} and the previous singularity "
                f"overlap; reduce detour_radius"
            )
        total += _segment_integral(logderiv, cursor, entry)
        total += _arc_integral(
            logderiv,
            complex(loc.real, y),
            detour_radius,
            math.pi,
            math.pi - sign * math.pi,
        )
        cursor = exit_
    total += _segment_integral(logderiv, cursor, s_max)
    return -(total) + tail_value


# ---------------------------------------------------------------------------
# factorization of the plain geodesic zeta into Selberg-type factors


def ruelle_factorization_check(
    s: complex,
    sigma: MRep,
    chi,
    spectrum,
    growth_constant: float | None = None,
) -> tuple[complex, complex, float]:
    """Compare R(s; k) with Z(s-1; k) Z(s+1; k) / (Z(s; k+1) Z(s; k-1)).

    All five factors are evaluated as geodesic sums in the common
    convergence region, so this is a pure identity check of the adjoint
    determinant expansion.  Returns (lhs, rhs, relative gap).
    """
    from .zeta import ZetaRequest, log_ruelle, log_selberg

    if sigma.dimension_d != 3:
        from .errors import Unsupported

        raise Unsupported("the factorization identity is a dimension-3 statement")
    k = sigma.weight[0]

    def z(s_arg: complex, k_arg: float) -> complex:
        req = ZetaRequest(
            s=s_arg,
            sigma=MRep(3, (k_arg,)),
            spectrum=spectrum,
            kind="selberg",
            chi=chi,
            growth_constant=growth_constant,
        )
        return log_selberg(req).value

    lhs = cmath.exp(
        log_ruelle(
            ZetaRequest(
                s=s,
                sigma=sigma,
                spectrum=spectrum,
                kind="ruelle",
                chi=chi,
                growth_constant=growth_constant,
            )
        ).value
    )
    rhs = cmath.exp(z(s - 1.0, k) + z(s + 1.0, k) - z(s, k + 1.0) - z(s, k - 1.0))
    gap = abs(lhs - rhs) / max(abs(rhs), 1e-300)
    return lhs, rhs, gap
