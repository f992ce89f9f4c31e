#include "reldec/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace reldec {

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("pmf must have at least one entry");
    }
    double total = 0.0;
    for (std::size_t x = 0; x < probs_.size(); ++x) {
        const double p = probs_[x];
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("pmf entry " + std::to_string(x) +
                                        " outside [0, 1]: " + std::to_string(p));
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kMassTolerance) {
        throw std::invalid_argument("pmf entries sum to " + std::to_string(total) +
                                    ", not 1");
    }
}

Pmf Pmf::padded_to(std::size_t max_value) const {
    if (max_value < this->max_value()) {
        throw std::invalid_argument("cannot pad a pmf to a smaller range");
    }
    std::vector<double> out(max_value + 1, 0.0);
    std::copy(probs_.begin(), probs_.end(), out.begin());
    return Pmf(std::move(out));
}

std::pair<Pmf, Pmf> common_support(const Pmf& a, const Pmf& b) {
    const std::size_t n = std::max(a.max_value(), b.max_value());
    return {a.padded_to(n), b.padded_to(n)};
}

PoissonParams::PoissonParams(double m) : m_(m) {
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw std::invalid_argument("Poisson mean must be positive and finite, got " +
                                    std::to_string(m));
    }
}

double poisson_log_prob(const PoissonParams& params, std::size_t x) {
    const double m = params.m();
    const double xd = static_cast<double>(x);
    return -m + xd * std::log(m) - std::lgamma(xd + 1.0);
}

double poisson_tail_mass(const PoissonParams& params, std::size_t max_value,
                         double stop_above) {
    // Terms decrease geometrically once x exceeds m, so the loop terminates
    // either on negligible terms or on reaching stop_above.
    double tail = 0.0;
    for (std::size_t x = max_value + 1;; ++x) {
        const double term = std::exp(poisson_log_prob(params, x));
        tail += term;
        if (tail >= stop_above) {
            return tail;
        }
        if (static_cast<double>(x) > params.m() && term <= tail * 1e-18) {
            return tail;
        }
        if (static_cast<double>(x) > params.m() && term == 0.0) {
            return tail;
        }
    }
}

std::size_t auto_cutoff(const PoissonParams& params) {
    const double m = params.m();
    auto n = static_cast<std::size_t>(std::ceil(m + 12.0 * std::sqrt(m)));
    n = std::max<std::size_t>(n, 50);
    while (poisson_tail_mass(params, n, kTailTolerance) >= kTailTolerance) {
        ++n;
    }
    return n;
}

Pmf poisson_pmf(const PoissonParams& params, std::size_t max_value) {
    const double tail = poisson_tail_mass(params, max_value, kTailTolerance);
    if (tail >= kTailTolerance) {
        throw std::invalid_argument(
            "cutoff " + std::to_string(max_value) + " too small for Poisson mean " +
            std::to_string(params.m()) + " (tail mass >= 1e-12); use auto_cutoff");
    }
    std::vector<double> probs(max_value + 1);
    for (std::size_t x = 0; x <= max_value; ++x) {
        probs[x] = std::exp(poisson_log_prob(params, x));
    }
    return Pmf(std::move(probs));
}

Pmf empirical_pmf(const Counts& histogram) {
    std::uint64_t total = 0;
    std::size_t top = 0;
    for (const auto& [x, count] : histogram) {
        total += count;
        if (count > 0) {
            top = std::max(top, x);
        }
    }
    if (total == 0) {
        throw std::invalid_argument("empirical pmf needs at least one positive count");
    }
    std::vector<double> probs(top + 1, 0.0);
    for (const auto& [x, count] : histogram) {
        if (count > 0) {
            probs[x] = static_cast<double>(count) / static_cast<double>(total);
        }
    }
    return Pmf(std::move(probs));
}

}  // namespace reldec
