"""Exact zeta functions, Nielsen numbers and Floer dimensions for surface maps."""

__version__ = "0.1.0"

from .asymptotics import GrowthEstimate, asymptotic_invariant, growth_rate, torus_entropy
from .exact_algebra import (
    FormalPowerSeries,
    Polynomial,
    RationalFunction,
    expand_rational,
    reversed_char_poly,
    series_exp,
    series_log,
    zeta_series_from_counts,
)
from .homology import GradedHomologyAction, euler_symplectic_zeta, lefschetz_number, lefschetz_zeta
from .periodic import (
    CyclotomicProduct,
    NielsenData,
    expand_counts,
    expand_cyclotomic,
    moebius,
    p_coefficients,
    periodic_zeta,
)
from .subshift import (
    SignedSubshiftFamily,
    Subshift,
    brute_force_count,
    subshift_zeta,
    trace_count,
    trace_formula,
)
from .torsion import UnitHolonomy, torsion_direct, torsion_via_zeta
from .torus import (
    SignData,
    TorusMap,
    floer_dimension,
    is_hyperbolic,
    nielsen_number,
    sign_data,
    torus_zeta,
)
