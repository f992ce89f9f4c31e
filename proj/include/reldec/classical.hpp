#pragma once

// Set-based (Neyman-Pearson) decision between non-relevance and relevance.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "reldec/distributions.hpp"

namespace reldec {

/// Prior probability of non-relevance.
class Prior {
public:
    explicit Prior(double xi);
    double xi() const noexcept { return xi_; }

private:
    double xi_;
};

/// Upper-tail acceptance region {x_alpha, ..., N}. x_alpha == N + 1 rejects
/// always; x_alpha == 0 accepts always.
struct Threshold {
    std::size_t x_alpha = 0;
};

/// (size, power) of a test: false-alarm and detection probabilities.
struct OperatingPoint {
    double size = 0.0;
    double power = 0.0;

    OperatingPoint() = default;
    OperatingPoint(double size, double power);
};

struct ErrorPoint {
    double p_error = 0.0;
    double p_correct = 1.0;

    static ErrorPoint from_error(double p_error);
};

/// Slack allowed when comparing an achieved size against the nominal alpha.
inline constexpr double kSizeSlack = 1e-12;

/// Smallest x_alpha whose upper tail under pmf0 has mass <= alpha.
Threshold np_threshold(const Pmf& pmf0, const Pmf& pmf1, double alpha);

OperatingPoint operating_point(const Pmf& pmf0, const Pmf& pmf1, Threshold t);

/// p_error = xi * size + (1 - xi) * (1 - power).
ErrorPoint error_point(const OperatingPoint& op, const Prior& prior);

/// Equiprobable-state error of the Poisson threshold test, as finite sums.
/// For m1 >= m0 relevance is accepted on {x_alpha, ...}; for m1 < m0 the
/// region flips to {0, ..., x_alpha - 1}.
ErrorPoint poisson_error_sum(const PoissonParams& m0, const PoissonParams& m1,
                             Threshold t);

struct EnvelopeValue {
    ErrorPoint error;
    std::size_t index = 0;
};

/// Pointwise minimum of the affine error lines at the given prior. Lowest
/// index wins ties.
EnvelopeValue min_error_envelope(std::span<const OperatingPoint> points,
                                 const Prior& prior);

/// Priors at which consecutive error lines cross. Points must be sorted by
/// increasing size; identical neighbours throw std::domain_error.
std::vector<Prior> envelope_breakpoints(std::span<const OperatingPoint> points);

/// Minimum error over all deterministic acceptance subsets:
/// sum_x min(xi p0(x), (1 - xi) p1(x)).
ErrorPoint bayes_error(const Pmf& pmf0, const Pmf& pmf1, const Prior& prior);

}  // namespace reldec
