"""Exact signed Stirling numbers of the first kind, partial Bell polynomials and identity audits."""

from .bell import (
    bell_factorial_closed_form,
    bell_fractional_closed_form,
    bell_partitions,
    bell_recurrence,
    bell_series,
    bell_zero_factorial_closed_form,
    exp_reciprocal_coeffs,
    faa_di_bruno,
    h_derivative_at_zero,
    lah_a,
)
from .exact_core import (
    RationalSeries,
    binom_extended,
    binom_standard,
    factorial,
    series_log1p,
    series_mul,
    series_pow,
)
from .identities import (
    IDENTITIES,
    SuiteConfig,
    VerificationReport,
    coefficient_vector,
    log_convexity_check,
    run_suite,
    verify_identity,
)
from .strategies import (
    build_table,
    s_column_vertical,
    s_diagonal_extension,
    s_faa_route,
    s_genfun,
    s_harmonic_recurrence,
    s_nested_harmonic,
    s_row_from_above,
    s_row_horizontal,
    s_triangular,
    s_vertical_factorial,
)
from .table import STRATEGIES, SignedStirlingTable

__version__ = "0.1.0"
