"""Classical and vector-space binary relevance decisions."""

from ._core import (
    auto_cutoff,
    bayes_error,
    embed,
    empirical_pmf,
    envelope_breakpoints,
    error_point,
    exhaustive_subset_error,
    helstrom_error,
    measurement_angle_scan,
    min_error_envelope,
    np_threshold,
    operating_point,
    optimal_angle,
    optimal_measurement,
    overlap,
    poisson_error_sum,
    poisson_overlap,
    poisson_pmf,
    quadrature_gamma_integral,
    quantum_power_at_size,
    run_property_suite,
    run_sweep,
    tokenize,
    topic_words,
)

__all__ = [
    "auto_cutoff",
    "bayes_error",
    "embed",
    "empirical_pmf",
    "envelope_breakpoints",
    "error_point",
    "exhaustive_subset_error",
    "helstrom_error",
    "measurement_angle_scan",
    "min_error_envelope",
    "np_threshold",
    "operating_point",
    "optimal_angle",
    "optimal_measurement",
    "overlap",
    "poisson_error_sum",
    "poisson_overlap",
    "poisson_pmf",
    "quadrature_gamma_integral",
    "quantum_power_at_size",
    "run_property_suite",
    "run_sweep",
    "tokenize",
    "topic_words",
]
