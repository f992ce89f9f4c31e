#include "reldec/classical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace reldec {

namespace {

void require_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                    std::to_string(v));
    }
}

// suffix[x] = sum_{y >= x} probs[y], with suffix[N + 1] = 0.
std::vector<double> upper_tails(std::span<const double> probs) {
    std::vector<double> suffix(probs.size() + 1, 0.0);
    for (std::size_t x = probs.size(); x-- > 0;) {
        suffix[x] = std::min(1.0, suffix[x + 1] + probs[x]);
    }
    return suffix;
}

}  // namespace

Prior::Prior(double xi) : xi_(xi) { require_unit_interval(xi, "prior xi"); }

OperatingPoint::OperatingPoint(double size_, double power_) : size(size_), power(power_) {
    require_unit_interval(size, "size");
    require_unit_interval(power, "power");
}

ErrorPoint ErrorPoint::from_error(double p_error) {
    require_unit_interval(p_error, "probability of error");
    return ErrorPoint{p_error, 1.0 - p_error};
}

Threshold np_threshold(const Pmf& pmf0, const Pmf& pmf1, double alpha) {
    require_unit_interval(alpha, "alpha");
    const auto [p0, p1] = common_support(pmf0, pmf1);
    const auto tails = upper_tails(p0.probs());
    for (std::size_t x = 0; x < tails.size(); ++x) {
        if (tails[x] <= alpha + kSizeSlack) {
            return Threshold{x};
        }
    }
    return Threshold{tails.size() - 1};
}

OperatingPoint operating_point(const Pmf& pmf0, const Pmf& pmf1, Threshold t) {
    const auto [p0, p1] = common_support(pmf0, pmf1);
    if (t.x_alpha > p0.size()) {
        throw std::invalid_argument("threshold " + std::to_string(t.x_alpha) +
                                    " beyond N + 1 = " + std::to_string(p0.size()));
    }
    double size = 0.0;
    double power = 0.0;
    for (std::size_t x = p0.size(); x-- > t.x_alpha;) {
        size += p0[x];
        power += p1[x];
    }
    return OperatingPoint(std::min(size, 1.0), std::min(power, 1.0));
}

ErrorPoint error_point(const OperatingPoint& op, const Prior& prior) {
    const double xi = prior.xi();
    return ErrorPoint::from_error(xi * op.size + (1.0 - xi) * (1.0 - op.power));
}

ErrorPoint poisson_error_sum(const PoissonParams& m0, const PoissonParams& m1,
                             Threshold t) {
    const std::size_t n = auto_cutoff(PoissonParams(std::max(m0.m(), m1.m())));
    const Pmf p0 = poisson_pmf(m0, n);
    const Pmf p1 = poisson_pmf(m1, n);
    if (t.x_alpha > n + 1) {
        throw std::invalid_argument("threshold beyond the Poisson cutoff");
    }
    double lower0 = 0.0, lower1 = 0.0, upper0 = 0.0, upper1 = 0.0;
    for (std::size_t x = 0; x <= n; ++x) {
        if (x < t.x_alpha) {
            lower0 += p0[x];
            lower1 += p1[x];
        } else {
            upper0 += p0[x];
            upper1 += p1[x];
        }
    }
    // Errors: false alarm under m0 plus miss under m1.
    const double err = m1.m() >= m0.m() ? 0.5 * (upper0 + lower1) : 0.5 * (lower0 + upper1);
    return ErrorPoint::from_error(std::clamp(err, 0.0, 1.0));
}

EnvelopeValue min_error_envelope(std::span<const OperatingPoint> points,
                                 const Prior& prior) {
    if (points.empty()) {
        throw std::invalid_argument("envelope needs at least one operating point");
    }
    EnvelopeValue best{error_point(points[0], prior), 0};
    for (std::size_t i = 1; i < points.size(); ++i) {
        const ErrorPoint e = error_point(points[i], prior);
        if (e.p_error < best.error.p_error) {
            best = {e, i};
        }
    }
    return best;
}

std::vector<Prior> envelope_breakpoints(std::span<const OperatingPoint> points) {
    std::vector<Prior> out;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const OperatingPoint& a = points[i];
        const OperatingPoint& b = points[i + 1];
        if (b.size < a.size) {
            throw std::invalid_argument("operating points must be sorted by size");
        }
        const double d_power = b.power - a.power;
        const double denom = (b.size - a.size) + d_power;
        if (denom == 0.0) {
            throw std::domain_error("operating points " + std::to_string(i) + " and " +
                                    std::to_string(i + 1) + " have no crossing prior");
        }
        const double xi = d_power / denom;
        if (!(xi >= 0.0 && xi <= 1.0)) {
            throw std::domain_error("error lines " + std::to_string(i) + " and " +
                                    std::to_string(i + 1) + " cross outside [0, 1]");
        }
        out.emplace_back(xi);
    }
    return out;
}

ErrorPoint bayes_error(const Pmf& pmf0, const Pmf& pmf1, const Prior& prior) {
    const auto [p0, p1] = common_support(pmf0, pmf1);
    const double xi = prior.xi();
    double err = 0.0;
    for (std::size_t x = 0; x < p0.size(); ++x) {
        err += std::min(xi * p0[x], (1.0 - xi) * p1[x]);
    }
    return ErrorPoint::from_error(std::clamp(err, 0.0, 1.0));
}

}  // namespace reldec
