#pragma once

// Vector-space decision between two pure relevance states.

#include <span>
#include <vector>

#include "reldec/classical.hpp"
#include "reldec/distributions.hpp"

namespace reldec {

/// Unit-norm real amplitude vector over the observable basis {|0>, ..., |N>}.
class StateVector {
public:
    explicit StateVector(std::vector<double> amplitudes);

    std::size_t size() const noexcept { return amplitudes_.size(); }
    std::span<const double> amplitudes() const noexcept { return amplitudes_; }
    double operator[](std::size_t x) const noexcept { return amplitudes_[x]; }

private:
    std::vector<double> amplitudes_;
};

/// Squared cosine of the angle between two state vectors.
class Overlap {
public:
    explicit Overlap(double delta);
    double delta() const noexcept { return delta_; }

private:
    double delta_;
};

/// Orthonormal acceptance/rejection pair of a binary measurement, with the
/// decision geometry. Angles are in radians:
///   gamma  angle between the two states,
///   theta  (pi/2 - gamma) / 2, the symmetric optimum,
///   eta0   angle between mu0 and s0, eta1 between mu1 and s1.
/// eigen_accept / eigen_reject are the eigenvalues of the prior-weighted
/// difference operator (1 - xi)|s1><s1| - xi|s0><s0| along mu1 / mu0.
struct MeasurementBasis {
    std::vector<double> mu0;
    std::vector<double> mu1;
    double gamma = 0.0;
    double theta = 0.0;
    double eta0 = 0.0;
    double eta1 = 0.0;
    double eigen_accept = 0.0;
    double eigen_reject = 0.0;
};

/// Dense (N+1)x(N+1) row-major matrix of (1 - xi)|s1><s1| - xi|s0><s0|.
struct DifferenceOperator {
    std::size_t dim = 0;
    std::vector<double> matrix;

    double at(std::size_t r, std::size_t c) const { return matrix[r * dim + c]; }
    double trace() const;
};

/// States whose overlap is within this of 1 are treated as parallel.
inline constexpr double kParallelTolerance = 1e-12;

/// Nonnegative square-root embedding: amplitude[x] = sqrt(p(x)).
StateVector embed(const Pmf& pmf);

Overlap overlap(const StateVector& s0, const StateVector& s1);

/// Overlap of two Poisson states, summed up to auto_cutoff(max(m0, m1)).
Overlap poisson_overlap(const PoissonParams& m0, const PoissonParams& m1);

/// Helstrom bound: Q_e = (1 - sqrt(1 - 4 xi (1 - xi) delta)) / 2.
ErrorPoint helstrom_error(const Overlap& delta, const Prior& prior);

DifferenceOperator difference_operator(const StateVector& s0, const StateVector& s1,
                                       const Prior& prior);

/// Eigenbasis of the difference operator inside span(s0, s1). Throws
/// std::domain_error for parallel states.
MeasurementBasis optimal_measurement(const StateVector& s0, const StateVector& s1,
                                     const Prior& prior);

/// (pi/2 - gamma) / 2 for gamma in [0, pi/2].
double optimal_angle(double gamma);

/// size = <mu1|s0>^2, power = <mu1|s1>^2.
OperatingPoint measurement_operating_point(const MeasurementBasis& basis,
                                           const StateVector& s0,
                                           const StateVector& s1);

/// Largest detection probability over projective tests whose false-alarm
/// probability is exactly alpha.
double quantum_power_at_size(const Overlap& delta, double alpha);

}  // namespace reldec
