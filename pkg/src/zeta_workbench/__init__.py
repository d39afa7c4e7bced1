"""Numerical workbench for geodesic zeta functions of hyperbolic
3-manifold data: length-spectrum ingestion and enumeration, twisted
class-sum evaluation, trace-side diagnostics, and meromorphic
continuation from eigenvalue data.
"""

from __future__ import annotations

from .continuation import (
    ResolventGrid,
    continued_super_logderiv,
    continued_sym_logderiv,
    log_zeta_by_path,
    partial_fraction_weights,
    residue_at,
    ruelle_factorization_check,
    singularity_catalog,
    super_tail_log,
)
from .enumerator import (
    EnumerationConfig,
    GroupPresentation,
    complex_length,
    enumerate_spectrum,
    parse_group_presentation,
    primitive_decomposition,
    serialize_group_presentation,
    spectrum_is_incomplete,
    validate_words,
    word_matrix,
)
from .errors import (
    AtSingularity,
    CaseAError,
    ConvergenceRegionError,
    DegenerateShifts,
    InvariantViolation,
    MissingVolume,
    NoConvergence,
    NotLoxodromic,
    ParityViolation,
    PathThroughSingularity,
    QuadratureFailure,
    SchemaError,
    UnknownSymbol,
    Unsupported,
    WorkbenchError,
)
from .reps import (
    GammaRep,
    MRep,
    PlancherelPoly,
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
from .spectra import (
    DiracSpectrum,
    EigenvalueSpectrum,
    GeodesicClass,
    LaplaceSpectrum,
    LengthSpectrum,
    SingularityRecord,
    TruncatedValue,
    export_classes_csv,
    parse_eigenvalue_spectrum,
    parse_length_spectrum,
    serialize_eigenvalue_spectrum,
    serialize_length_spectrum,
    square_spectrum,
    super_multiplicity,
    wrap_angle,
)
from .traces import (
    HeatParams,
    class_term_t_integral,
    dee_gamma,
    dirac_geometric_side,
    dirac_spectral_side,
    fourier_gaussian_check,
    gaussian_moment,
    heat_geometric_side,
    heat_spectral_side,
    identity_term_dirac,
    identity_term_heat,
    laplace_kernel_check,
)
from .verify import run_all, run_suite
from .zeta import (
    ZetaRequest,
    convergence_abscissa,
    log_derivative_super,
    log_derivative_symmetrized,
    log_ruelle,
    log_selberg,
    log_super,
    log_super_ruelle,
    log_symmetrized,
    log_zeta,
)

__version__ = "0.1.0"

__all__ = [
    "AtSingularity",
    "CaseAError",
    "ConvergenceRegionError",
    "DegenerateShifts",
    "DiracSpectrum",
    "EigenvalueSpectrum",
    "EnumerationConfig",
    "GammaRep",
    "GeodesicClass",
    "GroupPresentation",
    "HeatParams",
    "InvariantViolation",
    "LaplaceSpectrum",
    "LengthSpectrum",
    "MRep",
    "MissingVolume",
    "NoConvergence",
    "NotLoxodromic",
    "ParityViolation",
    "PathThroughSingularity",
    "PlancherelPoly",
    "QuadratureFailure",
    "ResolventGrid",
    "SchemaError",
    "SingularityRecord",
    "TruncatedValue",
    "UnknownSymbol",
    "Unsupported",
    "WorkbenchError",
    "ZetaRequest",
    "ad_nbar_det",
    "c_shift",
    "case_of",
    "character_chi",
    "character_sigma",
    "class_term_t_integral",
    "complex_length",
    "continued_super_logderiv",
    "continued_sym_logderiv",
    "convergence_abscissa",
    "dee_gamma",
    "dirac_geometric_side",
    "dirac_spectral_side",
    "enumerate_spectrum",
    "export_classes_csv",
    "fourier_gaussian_check",
    "gaussian_moment",
    "heat_geometric_side",
    "heat_spectral_side",
    "identity_term_dirac",
    "identity_term_heat",
    "laplace_kernel_check",
    "log_derivative_super",
    "log_derivative_symmetrized",
    "log_ruelle",
    "log_selberg",
    "log_super",
    "log_super_ruelle",
    "log_symmetrized",
    "log_zeta",
    "log_zeta_by_path",
    "parse_eigenvalue_spectrum",
    "parse_gamma_rep",
    "parse_group_presentation",
    "parse_length_spectrum",
    "partial_fraction_weights",
    "plancherel",
    "primitive_decomposition",
    "residue_at",
    "rho_m",
    "rho_norm",
    "ruelle_factorization_check",
    "run_all",
    "run_suite",
    "serialize_eigenvalue_spectrum",
    "serialize_gamma_rep",
    "serialize_group_presentation",
    "serialize_length_spectrum",
    "singularity_catalog",
    "spectrum_is_incomplete",
    "spin_minus",
    "spin_plus",
    "square_spectrum",
    "super_multiplicity",
    "super_tail_log",
    "sym_power_trace",
    "trivial_gamma_rep",
    "validate_words",
    "weyl_action",
    "word_matrix",
    "wrap_angle",
]
