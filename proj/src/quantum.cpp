#include "reldec/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace reldec {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    }
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// Angle between rays with the given adjacent and opposite legs; atan2 keeps
// full precision near 0 where acos does not.
double ray_angle(double along, double across) { return std::atan2(std::abs(across), std::abs(along)); }

// Unit eigenvector of the symmetric matrix [[a, b], [b, d]] for eigenvalue
// lambda, built from whichever row of (A - lambda I) is better conditioned.
std::pair<double, double> eigvec2(double a, double b, double d, double lambda) {
    const double r0x = lambda - d, r0y = b;  // from row 2: b x + (d - l) y = 0
    const double r1x = b, r1y = lambda - a;  // from row 1: (a - l) x + b y = 0
    const double n0 = std::hypot(r0x, r0y);
    const double n1 = std::hypot(r1x, r1y);
    if (n0 == 0.0 && n1 == 0.0) {
        return {1.0, 0.0};
    }
    return n0 >= n1 ? std::pair{r0x / n0, r0y / n0} : std::pair{r1x / n1, r1y / n1};
}

}  // namespace

StateVector::StateVector(std::vector<double> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw std::invalid_argument("state vector must have at least one amplitude");
    }
    const double norm2 = dot(amplitudes_, amplitudes_);
    if (std::abs(norm2 - 1.0) > kMassTolerance) {
        throw std::invalid_argument("state vector is not unit norm (squared norm " +
                                    std::to_string(norm2) + ")");
    }
}

Overlap::Overlap(double delta) : delta_(delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw std::invalid_argument("overlap must lie in [0, 1], got " + std::to_string(delta));
    }
}

double DifferenceOperator::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        t += at(i, i);
    }
    return t;
}

StateVector embed(const Pmf& pmf) {
    std::vector<double> amp(pmf.size());
    std::transform(pmf.probs().begin(), pmf.probs().end(), amp.begin(),
                   [](double p) { return std::sqrt(p); });
    return StateVector(std::move(amp));
}

Overlap overlap(const StateVector& s0, const StateVector& s1) {
    const double c = dot(s0.amplitudes(), s1.amplitudes());
    return Overlap(std::min(c * c, 1.0));
}

Overlap poisson_overlap(const PoissonParams& m0, const PoissonParams& m1) {
    const std::size_t n = auto_cutoff(PoissonParams(std::max(m0.m(), m1.m())));
    return overlap(embed(poisson_pmf(m0, n)), embed(poisson_pmf(m1, n)));
}

ErrorPoint helstrom_error(const Overlap& delta, const Prior& prior) {
    const double xi = prior.xi();
    const double radicand = std::max(0.0, 1.0 - 4.0 * xi * (1.0 - xi) * delta.delta());
    return ErrorPoint::from_error(std::clamp(0.5 * (1.0 - std::sqrt(radicand)), 0.0, 1.0));
}

DifferenceOperator difference_operator(const StateVector& s0, const StateVector& s1,
                                       const Prior& prior) {
    if (s0.size() != s1.size()) {
        throw std::invalid_argument("state vectors differ in dimension");
    }
    const double w0 = prior.xi();
    const double w1 = 1.0 - w0;
    DifferenceOperator op{s0.size(), std::vector<double>(s0.size() * s0.size())};
    for (std::size_t r = 0; r < op.dim; ++r) {
        for (std::size_t c = 0; c < op.dim; ++c) {
            op.matrix[r * op.dim + c] = w1 * (s1[r] * s1[c]) - w0 * (s0[r] * s0[c]);
        }
    }
    return op;
}

MeasurementBasis optimal_measurement(const StateVector& s0, const StateVector& s1,
                                     const Prior& prior) {
    const double c = dot(s0.amplitudes(), s1.amplitudes());
    // Orthonormal basis of the span: e0 = s0, e1 = (s1 - c s0) / s.
    const std::size_t dim = s0.size();
    std::vector<double> e1(dim);
    double s2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        e1[i] = s1[i] - c * s0[i];
        s2 += e1[i] * e1[i];
    }
    if (s2 < kParallelTolerance) {
        throw std::domain_error("state vectors are parallel; no measurement discriminates them");
    }
    const double s = std::sqrt(s2);
    for (auto& v : e1) {
        v /= s;
    }
    // In (e0, e1) coordinates s0 = (1, 0) and s1 = (c, s).
    const double w0 = prior.xi();
    const double w1 = 1.0 - w0;
    const double a = w1 * c * c - w0;
    const double b = w1 * c * s;
    const double d = w1 * s * s;
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), b);
    const double lambda_plus = mean + radius;
    const double lambda_minus = mean - radius;

    auto [ux, uy] = eigvec2(a, b, d, lambda_plus);
    // Acceptance ray points towards s1; rejection ray is its in-plane normal.
    if (ux * c + uy * s < 0.0) {
        ux = -ux;
        uy = -uy;
    }
    double vx = uy, vy = -ux;
    if (vx < 0.0) {
        vx = -vx;
        vy = -vy;
    }

    MeasurementBasis basis;
    basis.mu1.resize(dim);
    basis.mu0.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        basis.mu1[i] = ux * s0[i] + uy * e1[i];
        basis.mu0[i] = vx * s0[i] + vy * e1[i];
    }
    basis.gamma = ray_angle(c, s);
    basis.theta = optimal_angle(basis.gamma);
    basis.eta0 = ray_angle(vx, ux);
    basis.eta1 = ray_angle(ux * c + uy * s, vx * c + vy * s);
    basis.eigen_accept = lambda_plus;
    basis.eigen_reject = lambda_minus;
    return basis;
}

double optimal_angle(double gamma) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(gamma >= 0.0 && gamma <= half_pi)) {
        throw std::invalid_argument("angle between states must lie in [0, pi/2], got " +
                                    std::to_string(gamma));
    }
    return (half_pi - gamma) / 2.0;
}

OperatingPoint measurement_operating_point(const MeasurementBasis& basis,
                                           const StateVector& s0,
                                           const StateVector& s1) {
    const double a0 = dot(basis.mu1, s0.amplitudes());
    const double a1 = dot(basis.mu1, s1.amplitudes());
    return OperatingPoint(std::min(a0 * a0, 1.0), std::min(a1 * a1, 1.0));
}

double quantum_power_at_size(const Overlap& delta, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1], got " + std::to_string(alpha));
    }
    const double dl = delta.delta();
    if (alpha >= dl) {
        return 1.0;
    }
    const double r = std::sqrt(alpha * dl) + std::sqrt((1.0 - alpha) * (1.0 - dl));
    return std::min(r * r, 1.0);
}

}  // namespace reldec
