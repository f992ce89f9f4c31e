#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace reldec {

/// Histogram of an observable: value x -> number of observations.
using Counts = std::map<std::size_t, std::uint64_t>;

/// Largest tail mass tolerated when truncating an unbounded distribution.
inline constexpr double kTailTolerance = 1e-12;

/// Tolerance on the total mass of a constructed Pmf.
inline constexpr double kMassTolerance = 1e-9;

/// Finite probability mass function over the observable values {0, ..., N}.
///
/// Construction validates that every entry lies in [0, 1] and that the
/// entries sum to one within kMassTolerance. Mass beyond N is taken to be
/// exactly zero; nothing is renormalized.
class Pmf {
public:
    explicit Pmf(std::vector<double> probs);

    std::size_t max_value() const noexcept { return probs_.size() - 1; }
    std::size_t size() const noexcept { return probs_.size(); }
    std::span<const double> probs() const noexcept { return probs_; }
    double operator[](std::size_t x) const noexcept { return probs_[x]; }

    /// Zero-pads to the observable range {0, ..., max_value}.
    Pmf padded_to(std::size_t max_value) const;

    friend bool operator==(const Pmf&, const Pmf&) = default;

private:
    std::vector<double> probs_;
};

/// Embeds two pmfs in a common observable basis by zero-padding the shorter.
std::pair<Pmf, Pmf> common_support(const Pmf& a, const Pmf& b);

/// Expected term frequency of a Poisson model.
class PoissonParams {
public:
    explicit PoissonParams(double m);
    double m() const noexcept { return m_; }

private:
    double m_;
};

/// e^(-m) m^x / x!, evaluated in log space.
double poisson_log_prob(const PoissonParams& params, std::size_t x);

/// Probability mass strictly above max_value. The summation stops early once
/// the mass reaches `stop_above`, since callers only compare against it.
double poisson_tail_mass(const PoissonParams& params, std::size_t max_value,
                         double stop_above = 1.0);

/// Smallest N >= max(50, ceil(m + 12 sqrt(m))) whose tail mass is below
/// kTailTolerance.
std::size_t auto_cutoff(const PoissonParams& params);

/// Truncated Poisson pmf on {0, ..., max_value}. Throws std::invalid_argument
/// when the discarded tail mass is not below kTailTolerance.
Pmf poisson_pmf(const PoissonParams& params, std::size_t max_value);

/// Relative-frequency pmf over {0, ..., largest observed x}.
Pmf empirical_pmf(const Counts& histogram);

}  // namespace reldec
