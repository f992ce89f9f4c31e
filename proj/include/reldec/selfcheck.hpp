#pragma once

// Randomized property checks of the closed forms against the oracles and
// against each other. Used by the `oracle` CLI subcommand and the
// acceptance suite.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "reldec/distributions.hpp"

namespace reldec {

struct CheckReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t comparisons = 0;
    std::size_t violations = 0;
    /// Largest observed discrepancy (signed margin for inequalities, absolute
    /// difference for equalities); <= tolerance means pass.
    double worst = 0.0;
    double tolerance = 0.0;

    bool passed() const { return violations == 0 && comparisons > 0; }
};

struct PoissonTuple {
    double m0 = 1.0;
    double m1 = 1.0;
    std::size_t x_alpha = 0;
};

/// m0, m1 uniform on (0, 10], x_alpha uniform on {x_min, ..., x_max}.
std::vector<PoissonTuple> random_poisson_tuples(std::mt19937_64& rng, std::size_t count,
                                                std::size_t x_min, std::size_t x_max);

/// Empirical pmf pair from random counts on {0, ..., N}, N uniform in
/// {1, ..., max_value}; some bins are left empty.
std::pair<Pmf, Pmf> random_pmf_pair(std::mt19937_64& rng, std::size_t max_value);

/// 0.01, 0.02, ..., 0.99.
std::vector<double> percent_grid();

/// Angle-scan oracle and eigenbasis composition against the Helstrom bound.
std::vector<CheckReport> check_helstrom(std::mt19937_64& rng, std::size_t pairs,
                                        std::size_t steps = 100000);

/// Q_e <= P_e and Q_c >= P_c over the xi grid, for Poisson threshold tests.
CheckReport check_error_dominance(const std::vector<PoissonTuple>& tuples);

/// Quantum power at the classical size dominates the classical power.
CheckReport check_power_dominance(const std::vector<PoissonTuple>& tuples);

/// Distribution-free dominance on random empirical pmf pairs: against every
/// upper-tail test, bayes_error and the exhaustive-subset oracle.
std::vector<CheckReport> check_distribution_free(std::mt19937_64& rng, std::size_t pairs,
                                                  std::size_t max_value = 12);

/// Finite Poisson sums against quadrature of the incomplete-gamma integral.
CheckReport check_gamma_identity(std::mt19937_64& rng, std::size_t cases);

/// Everything above with the given seed; `cases` scales the tuple counts.
std::vector<CheckReport> run_property_suite(std::uint64_t seed, std::size_t cases);

}  // namespace reldec
