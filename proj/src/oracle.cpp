#include "reldec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace reldec::oracle {

ScanResult exhaustive_subset_error(const Pmf& pmf0, const Pmf& pmf1, const Prior& prior) {
    const std::size_t n = std::max(pmf0.size(), pmf1.size());
    if (n - 1 > kMaxSubsetValue) {
        throw std::invalid_argument("subset enumeration limited to N <= 20, got N = " +
                                    std::to_string(n - 1));
    }
    auto prob = [](const Pmf& p, std::size_t x) { return x < p.size() ? p[x] : 0.0; };
    const double xi = prior.xi();
    const std::size_t count = std::size_t{1} << n;

    // Subset sums by peeling the lowest set bit.
    std::vector<double> size(count, 0.0), power(count, 0.0);
    ScanResult out;
    out.best_value = std::numeric_limits<double>::infinity();
    std::size_t best_mask = 0;
    for (std::size_t mask = 0; mask < count; ++mask) {
        if (mask != 0) {
            const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
            const std::size_t rest = mask & (mask - 1);
            size[mask] = size[rest] + prob(pmf0, low);
            power[mask] = power[rest] + prob(pmf1, low);
        }
        const double err = xi * size[mask] + (1.0 - xi) * (1.0 - power[mask]);
        if (err < out.best_value) {
            out.best_value = err;
            best_mask = mask;
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (best_mask & (std::size_t{1} << x)) {
            out.best_subset.push_back(x);
        }
    }
    out.best_parameter = static_cast<double>(best_mask);
    out.evaluations = count;
    return out;
}

ScanResult measurement_angle_scan(const StateVector& s0, const StateVector& s1,
                                  const Prior& prior, std::size_t steps, bool polish) {
    if (steps < kMinScanSteps) {
        throw std::invalid_argument("angle scan needs at least 1000 steps");
    }
    if (s0.size() != s1.size()) {
        throw std::invalid_argument("state vectors differ in dimension");
    }
    const std::size_t dim = s0.size();
    const double xi = prior.xi();

    ScanResult out;
    // Empty acceptance subspace: never accept. Whole span: always accept.
    out.best_value = 1.0 - xi;
    out.best_parameter = std::numeric_limits<double>::quiet_NaN();
    if (xi < out.best_value) {
        out.best_value = xi;
    }
    out.evaluations = 2;

    // Coordinates of s0, s1 in an orthonormal basis (u, v) of their span.
    double c = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        c += s0[i] * s1[i];
    }
    std::vector<double> v(dim);
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = s1[i] - c * s0[i];
        vnorm2 += v[i] * v[i];
    }
    if (vnorm2 < 1e-24) {
        // Parallel states: every ray in any plane through s0 is dominated by
        // the two trivial subspaces.
        return out;
    }
    const double s = std::sqrt(vnorm2);
    // s0 = (1, 0), s1 = (c, s) in (u, v) coordinates.
    auto error_at = [&](double t) {
        const double ct = std::cos(t), st = std::sin(t);
        const double q0 = ct;
        const double q1 = c * ct + s * st;
        return xi * q0 * q0 + (1.0 - xi) * (1.0 - q1 * q1);
    };

    const double h = std::numbers::pi / static_cast<double>(steps);
    double grid_best = std::numeric_limits<double>::infinity();
    double grid_t = 0.0;
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = h * static_cast<double>(k);
        const double e = error_at(t);
        if (e < grid_best) {
            grid_best = e;
            grid_t = t;
        }
    }
    out.evaluations += steps;

    double best_t = grid_t;
    double best_e = grid_best;
    if (polish) {
        constexpr double inv_phi = 0.6180339887498949;
        double lo = grid_t - h, hi = grid_t + h;
        double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
        double f1 = error_at(x1), f2 = error_at(x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = error_at(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = error_at(x2);
            }
        }
        out.evaluations += 82;
        const double tm = 0.5 * (lo + hi);
        const double em = error_at(tm);
        if (em < best_e) {
            best_e = em;
            best_t = tm;
        }
    }
    if (best_e < out.best_value) {
        out.best_value = best_e;
        out.best_parameter = best_t;
    }
    return out;
}

double quadrature_gamma_integral(const PoissonParams& m0, const PoissonParams& m1,
                                 std::size_t x_alpha) {
    if (x_alpha == 0) {
        throw std::invalid_argument("gamma integral undefined for x_alpha = 0");
    }
    const double lo = std::min(m0.m(), m1.m());
    const double hi = std::max(m0.m(), m1.m());
    if (lo == hi) {
        return 0.0;
    }
    const double k = static_cast<double>(x_alpha);
    const double log_gamma = std::lgamma(k);
    auto integrand = [&](double t) {
        return std::exp((k - 1.0) * std::log(t) - t - log_gamma);
    };
    // The integrand is a gamma density, so its L1 norm is at most 1 and the
    // relative tolerance below bounds the absolute error by 1e-10.
    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, lo, hi, 20, 1e-10, &error);
    return value;
}

}  // namespace reldec::oracle
