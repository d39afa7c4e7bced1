"""Self-contained verification suites.

Each suite exercises one family of identities with fresh, seeded random
data and returns a machine-readable report:

    {"suite": name, "cases": n, "max_gap": g, "pass": bool,
     "seed": seed, "counterexample": str | None}

Suites: kernels, partial-fractions, residues, logderiv, factorization,
parity, trace-scaling.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .continuation import (
    continued_super_logderiv,
    continued_sym_logderiv,
    partial_fraction_weights,
    residue_at,
    singularity_catalog,
)
from .errors import ParityViolation, WorkbenchError
from .reps import MRep, plancherel
from .spectra import (
    DiracSpectrum,
    GeodesicClass,
    LaplaceSpectrum,
    LengthSpectrum,
    square_spectrum,
    super_multiplicity,
)
from .traces import (
    class_term_t_integral,
    dirac_geometric_side,
    fourier_gaussian_check,
    heat_geometric_side,
    identity_term_dirac,
    identity_term_heat,
    laplace_kernel_check,
)
from .zeta import (
    ZetaRequest,
    log_derivative_super,
    log_derivative_symmetrized,
    log_ruelle,
    log_selberg,
    log_super,
    log_symmetrized,
)

__all__ = ["SUITES", "run_suite", "run_all", "toy_spectrum", "single_class_spectrum"]


def _report(suite, cases, max_gap, passed, seed, counterexample=None):
    return {
        "suite": suite,
        "cases": cases,
        "max_gap": max_gap,
        "pass": bool(passed),
        "seed": seed,
        "counterexample": counterexample,
    }


# shared fixtures -----------------------------------------------------------


def toy_spectrum(volume: float | None = 1.0) -> LengthSpectrum:
    """Three primitive classes with incommensurate lengths and angles."""
    classes = (
        GeodesicClass(length=1.0, angle=0.7),
        GeodesicClass(length=1.3, angle=-2.1),
        GeodesicClass(length=1.7, angle=2.9),
    )
    return LengthSpectrum(
        dimension=3,
        cutoff=2.0,
        classes=classes,
        tolerance=1e-9,
        volume=volume,
        source="toy",
    )


def single_class_spectrum(
    l0: float, theta0: float, powers: int, volume: float | None = None
) -> LengthSpectrum:
    """One primitive class and its first `powers` powers."""
    from .spectra import wrap_angle

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
        tolerance=1e-9,
        volume=volume,
        source="single-class family",
    )


def random_dirac_spectrum(rng: np.random.Generator, max_entries: int = 20) -> DiracSpectrum:
    """Well-separated eigenvalues near the positive real axis, some negated.

    Separation of all +-i lam locations stays above 0.3 so that contour
    radius 0.1 is safe.
    """
    n = int(rng.integers(1, max_entries // 2 + 1))
    entries = []
    for i in range(n):
        re = 0.7 * (i + 1) + float(rng.uniform(-0.15, 0.15))
        im = float(rng.uniform(-0.1, 0.1)) * min(1.0, 0.4 * re)
        lam = complex(re, im)
        m = int(rng.integers(1, 5))
        entries.append((lam, m))
        if rng.random() < 0.4 and len(entries) < max_entries:
            entries.append((-lam, int(rng.integers(1, 5))))
    return DiracSpectrum(entries=tuple(entries))


# suites --------------------------------------------------------------------


def suite_kernels(seed: int = 0) -> dict:
    """Both analytic kernel identities on a 10x10 log-spaced grid."""
    grid = np.logspace(-1.0, 1.0, 10)
    max_gap, cases, worst = 0.0, 0, None
    for l in grid:
        for x in grid:
            _, _, gap1 = laplace_kernel_check(float(l), complex(x))
            _, _, gap2 = fourier_gaussian_check(float(l), float(x))
            cases += 2
            for tag, gap in (("laplace", gap1), ("fourier", gap2)):
                if gap > max_gap:
                    max_gap, worst = gap, f"{tag} kernel at l={l:g}, par={x:g}"
    passed = max_gap <= 1e-10
    return _report("kernels", cases, max_gap, passed, seed, None if passed else worst)


def suite_partial_fractions(seed: int = 0) -> dict:
    """Resolvent-product identity plus the full-grid spectral reductions."""
    rng = np.random.default_rng(seed)
    max_gap, cases, worst = 0.0, 0, None

    for trial in range(100):
        n = int(rng.integers(1, 7))
        shifts = []
        while len(shifts) < n:
            cand = complex(rng.uniform(0.5, 3.0), rng.uniform(-1.0, 1.0))
            # keep the squared shifts separated so the weights stay O(1);
            # nearly-coincident grids are ill-conditioned by nature and the
            # exactly degenerate case is rejected as DegenerateShifts
            if all(abs(cand * cand - s * s) > 0.25 for s in shifts):
                shifts.append(cand)
        weights = partial_fraction_weights(tuple(shifts))
        sq = [s * s for s in shifts]
        for _ in range(20):
            x = complex(rng.uniform(-0.4, 4.0), rng.uniform(-2.0, 2.0))
            if any(abs(x + q) < 1e-2 for q in sq):
                continue
            product = 1.0 + 0.0j
            for q in sq:
                product /= x + q
            sum_form = sum(w / (x + q) for w, q in zip(weights, sq))
            rel = abs(product - sum_form) / max(abs(product), 1e-300)
            cases += 1
            if rel > max_gap:
                max_gap, worst = rel, f"grid {trial}: N={n}, x={x}"

    # full-grid reductions: weighted sums of the continued log-derivatives
    # must equal the direct double sums over (eigenvalue, shift)
    sigma = MRep(3, (1.0,))
    poly = plancherel(sigma)
    for trial in range(20):
        n = int(rng.integers(1, 6))
        shifts = []
        while len(shifts) < n:
            cand = complex(rng.uniform(2.2, 5.0), rng.uniform(-0.5, 0.5))
            if all(abs(cand * cand - s * s) > 1e-3 for s in shifts):
                shifts.append(cand)
        weights = partial_fraction_weights(tuple(shifts))
        dirac = random_dirac_spectrum(rng, max_entries=12)
        laplace = square_spectrum(dirac)

        lhs = sum(
            w * (-0.5j) * continued_super_logderiv(s, dirac)
            for w, s in zip(weights, shifts)
        )
        terms = [
            w * m * ev / (ev * ev + s * s)
            for ev, m in dirac.entries
            for w, s in zip(weights, shifts)
        ]
        rhs = sum(terms)
        # +lam/-lam eigenvalue pairs cancel exactly, so normalize by the
        # mass of the summed terms rather than by the (possibly zero) total
        scale = max(sum(abs(t) for t in terms), 1e-12)
        rel = abs(lhs - rhs) / scale
        cases += 1
        if rel > max_gap:
            max_gap, worst = rel, f"first-order reduction, trial {trial}"

        vol = 1.0
        lhs2 = sum(
            w * continued_sym_logderiv(s, laplace, sigma, 1, vol, poly=poly)
            for w, s in zip(weights, shifts)
        )
        terms2 = [
            w * 2.0 * s * m / (mu + s * s)
            for mu, m in laplace.entries
            for w, s in zip(weights, shifts)
        ] + [
            -w * 4.0 * math.pi * vol * poly.at_s(s) for w, s in zip(weights, shifts)
        ]
        rhs2 = sum(terms2)
        scale2 = max(sum(abs(t) for t in terms2), 1e-12)
        rel2 = abs(lhs2 - rhs2) / scale2
        cases += 1
        if rel2 > max_gap:
            max_gap, worst = rel2, f"second-order reduction, trial {trial}"

    passed = max_gap <= 1e-10
    return _report(
        "partial-fractions", cases, max_gap, passed, seed, None if passed else worst
    )


def suite_residues(seed: int = 0) -> dict:
    """Contour residues equal multiplicities, for both continued sums."""
    rng = np.random.default_rng(seed)
    sigma = MRep(3, (1.0,))
    max_gap, cases, worst = 0.0, 0, None

    for trial in range(25):
        dirac = random_dirac_spectrum(rng)
        for ev, _ in dirac.entries:
            want = super_multiplicity(dirac, ev)
            got = residue_at(
                lambda z: continued_super_logderiv(z, dirac), 1j * ev, 0.1
            )
            gap = abs(got - want)
            cases += 1
            if gap > max_gap:
                max_gap, worst = gap, f"first order, trial {trial}, ev={ev}"
            got_neg = residue_at(
                lambda z: continued_super_logderiv(z, dirac), -1j * ev, 0.1
            )
            gap = abs(got_neg - (-want))
            cases += 1
            if gap > max_gap:
                max_gap, worst = gap, f"first order at -i ev, trial {trial}, ev={ev}"

        laplace = square_spectrum(dirac)

        def l_sym(z):
            return continued_sym_logderiv(z, laplace, sigma, 1, 1.0)

        for mu, m in laplace.entries:
            root = 1j * cmath.sqrt(mu)
            got = residue_at(l_sym, root, 0.05)
            gap = abs(got - m)
            cases += 1
            if gap > max_gap:
                max_gap, worst = gap, f"second order, trial {trial}, mu={mu}"

    # zero eigenvalue: second-order residue doubles
    dirac0 = DiracSpectrum(entries=((0.0, 3), (1.5, 1)))
    lap0 = square_spectrum(dirac0)
    got = residue_at(
        lambda z: continued_sym_logderiv(z, lap0, sigma, 1, 0.0), 0.0, 0.2
    )
    gap = abs(got - 6)
    cases += 1
    if gap > max_gap:
        max_gap, worst = gap, "second order at zero"

    # the density term is entire: no residue anywhere
    empty = LaplaceSpectrum(entries=())
    got = residue_at(
        lambda z: continued_sym_logderiv(z, empty, sigma, 1, 1.0),
        complex(0.7, 0.2),
        0.3,
    )
    cases += 1
    if abs(got) > max_gap:
        max_gap, worst = abs(got), "density-term contour"

    passed = max_gap <= 1e-8
    return _report("residues", cases, max_gap, passed, seed, None if passed else worst)


def suite_logderiv(seed: int = 0) -> dict:
    """Finite differences of the log sums against the Dirichlet sums, and
    the class-sum logs against brute-force truncated products."""
    rng = np.random.default_rng(seed)
    spectrum = toy_spectrum()
    sigma = MRep(3, (1.0,))
    h = 1e-4
    max_gap, cases, worst = 0.0, 0, None

    for i in range(10):
        s = complex(rng.uniform(2.0, 4.0), rng.uniform(-1.0, 1.0))

        def fd(fn):
            plus = fn(ZetaRequest(s=s + h, sigma=sigma, spectrum=spectrum, kind="super"))
            minus = fn(ZetaRequest(s=s - h, sigma=sigma, spectrum=spectrum, kind="super"))
            return (plus.value - minus.value) / (2.0 * h)

        got = fd(log_super)
        want = log_derivative_super(s, sigma, None, spectrum).value
        gap = abs(got - want)
        cases += 1
        if gap > max_gap:
            max_gap, worst = gap, f"super derivative at s={s}"

        got = (
            log_symmetrized(
                ZetaRequest(s=s + h, sigma=sigma, spectrum=spectrum, kind="symmetrized")
            ).value
            - log_symmetrized(
                ZetaRequest(s=s - h, sigma=sigma, spectrum=spectrum, kind="symmetrized")
            ).value
        ) / (2.0 * h)
        want = log_derivative_symmetrized(s, sigma, None, spectrum).value
        gap = abs(got - want)
        cases += 1
        if gap > max_gap:
            max_gap, worst = gap, f"symmetrized derivative at s={s}"

    if max_gap > 1e-6:
        return _report("logderiv", cases, max_gap, False, seed, worst)

    # product oracles: truncate the defining products directly
    product_gap = 0.0
    for l0, theta0 in ((2.0, 0.0), (1.5, 1.1)):
        family = single_class_spectrum(l0, theta0, powers=40)
        for s_real in (3.0, 4.0):
            s = complex(s_real)
            k = sigma.weight[0]
            oracle_z = 0.0 + 0.0j
            for kk in range(41):
                for a in range(kk + 1):
                    w = (
                        cmath.exp(1j * k * theta0)
                        * cmath.exp(1j * (2 * a - kk) * theta0)
                        * cmath.exp(-(kk + s + 1.0) * l0)
                    )
                    oracle_z += cmath.log(1.0 - w)
            got_z = log_selberg(
                ZetaRequest(s=s, sigma=sigma, spectrum=family, kind="selberg")
            ).value
            gap = abs(got_z - oracle_z)
            cases += 1
            if gap > product_gap:
                product_gap = gap
                if gap > 1e-10:
                    worst = f"selberg product oracle at l0={l0}, s={s_real}"

            oracle_r = cmath.log(1.0 - cmath.exp(1j * k * theta0) * cmath.exp(-s * l0))
            got_r = log_ruelle(
                ZetaRequest(s=s, sigma=sigma, spectrum=family, kind="ruelle")
            ).value
            gap = abs(got_r - oracle_r)
            cases += 1
            if gap > product_gap:
                product_gap = gap
                if gap > 1e-10:
                    worst = f"ruelle product oracle at l0={l0}, s={s_real}"

    passed = product_gap <= 1e-10
    return _report(
        "logderiv",
        cases,
        max(max_gap, product_gap),
        passed,
        seed,
        None if passed else worst,
    )


def suite_factorization(seed: int = 0) -> dict:
    """Four-factor product identity for the plain geodesic zeta."""
    from .continuation import ruelle_factorization_check

    rng = np.random.default_rng(seed)
    max_gap, cases, worst = 0.0, 0, None
    spectra = (
        toy_spectrum(volume=None),
        single_class_spectrum(1.2, 0.9, powers=3),
    )
    for k in (1.0, 0.5, 2.0):
        sigma = MRep(3, (k,))
        for spectrum in spectra:
            for i in range(5):
                s = complex(3.2 + 0.45 * i, float(rng.uniform(-0.3, 0.3)))
                _, _, gap = ruelle_factorization_check(s, sigma, None, spectrum)
                cases += 1
                if gap > max_gap:
                    max_gap, worst = gap, f"k={k}, s={s}"
    passed = max_gap <= 1e-9
    return _report(
        "factorization", cases, max_gap, passed, seed, None if passed else worst
    )


def suite_parity(seed: int = 0, inject_violation: bool = False) -> dict:
    """Catalog construction, antisymmetry, order-vs-residue agreement, and
    rejection of graded-parity violations."""
    rng = np.random.default_rng(seed)
    sigma = MRep(3, (1.0,))
    max_gap, cases, worst = 0.0, 0, None
    failures = []

    for trial in range(10):
        dirac = random_dirac_spectrum(rng, max_entries=8)
        for ev, _ in dirac.entries:
            if super_multiplicity(dirac, ev) != -super_multiplicity(dirac, -ev):
                failures.append(f"antisymmetry broken at {ev}")
            cases += 1
        catalog = singularity_catalog(dirac)
        laplace = square_spectrum(dirac)

        def l_plain(z):
            return 0.5 * (
                continued_sym_logderiv(z, laplace, sigma, 1, 1.0)
                + continued_super_logderiv(z, dirac)
            )

        for record in catalog:
            if record.zeta_kind != "selberg":
                continue
            got = residue_at(l_plain, record.location, 0.05)
            gap = abs(got - record.order)
            cases += 1
            if gap > max_gap:
                max_gap, worst = gap, f"order mismatch at {record.location}"

    # a spectrum pair no graded operator couple can produce must be refused
    bad_dirac = DiracSpectrum(entries=((1.0, 1),))
    bad_laplace = LaplaceSpectrum(entries=((1.0, 2),))
    cases += 1
    try:
        singularity_catalog(bad_dirac, bad_laplace)
        rejected = False
    except ParityViolation:
        rejected = True
    if inject_violation:
        # caller asked to push the bad pair through as if it were good data
        if rejected:
            failures.append(
                "injected parity violation: catalog refused the spectrum pair"
            )
    elif not rejected:
        failures.append("parity violation was not rejected")

    passed = not failures and max_gap <= 1e-8
    counter = failures[0] if failures else (worst if max_gap > 1e-8 else None)
    return _report("parity", cases, max_gap, passed, seed, counter)


def suite_trace_scaling(seed: int = 0) -> dict:
    """Identity-term cancellation plus linearity/scaling of the trace sides."""
    rng = np.random.default_rng(seed)
    sigma = MRep(3, (1.0,))
    spectrum = toy_spectrum()
    max_gap, cases, worst = 0.0, 0, None
    failures = []

    # odd integrand against matched densities: exact zero
    for t in (0.1, 1.0, 10.0):
        value = abs(identity_term_dirac(sigma, t))
        cases += 1
        if value > max_gap:
            max_gap, worst = value, f"identity term at t={t}"
    if max_gap > 1e-12:
        failures.append(worst)

    # sensitivity control: an odd density perturbation must show up
    base = plancherel(sigma)
    perturbed = (base.coefficients[0], 0.1, base.coefficients[2])
    for t in (0.1, 1.0, 10.0):
        value = abs(
            identity_term_dirac(
                sigma,
                t,
                plus_coefficients=perturbed,
                minus_coefficients=base.coefficients,
            )
        )
        cases += 1
        if value <= 1e-3:
            failures.append(f"odd perturbation invisible at t={t} (value {value:g})")

    # 1/n weighting: a primitive class plus its square must equal the
    # primitive side plus half the side of a lone class at the doubled length
    from .spectra import wrap_angle

    l0, th0 = 0.9, 0.7
    family = single_class_spectrum(l0, th0, powers=2)
    lone = LengthSpectrum(
        dimension=3,
        cutoff=3.0,
        classes=(GeodesicClass(length=l0, angle=th0),),
        tolerance=1e-9,
        source="lone",
    )
    lone_sq = LengthSpectrum(
        dimension=3,
        cutoff=3.0,
        classes=(GeodesicClass(length=2 * l0, angle=wrap_angle(2 * th0)),),
        tolerance=1e-9,
        source="lone square",
    )
    for t in (0.5, 2.0):
        whole = dirac_geometric_side(t, family, sigma)
        parts = dirac_geometric_side(t, lone, sigma) + 0.5 * dirac_geometric_side(
            t, lone_sq, sigma
        )
        gap = abs(whole - parts) / max(abs(whole), 1e-300)
        cases += 1
        if gap > 1e-12:
            failures.append(f"multiplicity weighting at t={t} (gap {gap:g})")

    # identity term scales linearly in volume and twist dimension
    t = 0.7
    one = heat_geometric_side(t, toy_spectrum(volume=1.0), sigma)
    three = heat_geometric_side(t, toy_spectrum(volume=3.0), sigma)
    geod = one - 2.0 * identity_term_heat(sigma, t)
    gap = abs((three - geod) - 3.0 * (one - geod)) / max(abs(one), 1e-300)
    cases += 1
    if gap > 1e-12:
        failures.append(f"volume linearity (gap {gap:g})")

    # long-time decay of the first-order geodesic sum: slope -3/2
    skew = LengthSpectrum(
        dimension=3,
        cutoff=2.0,
        classes=(GeodesicClass(length=1.0, angle=0.9),),
        tolerance=1e-9,
        source="slope probe",
    )
    t1, t2 = 5.0, 50.0
    v1 = abs(dirac_geometric_side(t1, skew, sigma))
    v2 = abs(dirac_geometric_side(t2, skew, sigma))
    # exp(-l^2/4t) drifts toward 1; remove it to isolate the power law
    v1 /= math.exp(-1.0 / (4.0 * t1))
    v2 /= math.exp(-1.0 / (4.0 * t2))
    slope = (math.log(v2) - math.log(v1)) / (math.log(t2) - math.log(t1))
    cases += 1
    if abs(slope + 1.5) > 0.1:
        failures.append(f"long-time slope {slope:.3f} is not -1.5")

    # the per-class normalization: t-integration against exp(-t s^2)
    # reproduces the super log-derivative weight
    for length, angle, mult, s in (
        (1.0, 0.7, 1, complex(2.0)),
        (1.7, -2.1, 2, complex(2.5, 0.4)),
        (0.8, 2.9, 1, complex(3.0, -0.2)),
    ):
        _, _, gap = class_term_t_integral(length, angle, mult, s)
        cases += 1
        if gap > max_gap:
            max_gap, worst = gap, f"class integral at l={length}"
        if gap > 1e-9:
            failures.append(f"class-term integral gap {gap:g} at l={length}")

    passed = not failures
    counter = failures[0] if failures else None
    return _report("trace-scaling", cases, max_gap, passed, seed, counter)


SUITES = {
    "kernels": suite_kernels,
    "partial-fractions": suite_partial_fractions,
    "residues": suite_residues,
    "logderiv": suite_logderiv,
    "factorization": suite_factorization,
    "parity": suite_parity,
    "trace-scaling": suite_trace_scaling,
}


def run_suite(name: str, seed: int = 0, inject_parity_violation: bool = False) -> dict:
    if name not in SUITES:
        raise WorkbenchError(
            f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}"
        )
    if name == "parity":
        return suite_parity(seed, inject_violation=inject_parity_violation)
    return SUITES[name](seed)


def run_all(seed: int = 0) -> list[dict]:
    return [run_suite(name, seed) for name in SUITES]
