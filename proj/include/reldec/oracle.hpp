#pragma once

// Brute-force verifiers for the closed forms in classical.hpp and quantum.hpp.
// Nothing here calls into those closed forms.

#include <cstddef>
#include <vector>

#include "reldec/classical.hpp"
#include "reldec/distributions.hpp"
#include "reldec/quantum.hpp"

namespace reldec::oracle {

struct ScanResult {
    double best_value = 0.0;
    /// Angle of the best acceptance ray, NaN when a rank-0/rank-2 subspace won.
    double best_parameter = 0.0;
    /// Acceptance subset achieving best_value (subset scans only).
    std::vector<std::size_t> best_subset;
    std::size_t evaluations = 0;
};

inline constexpr std::size_t kMaxSubsetValue = 20;
inline constexpr std::size_t kMinScanSteps = 1000;

/// Minimum prior-weighted error over all 2^(N+1) acceptance subsets.
ScanResult exhaustive_subset_error(const Pmf& pmf0, const Pmf& pmf1, const Prior& prior);

/// Minimum error over acceptance rays at angles t in [0, pi) of span(s0, s1),
/// plus the empty and the whole span. With `polish`, the best grid cell is
/// refined by golden-section search.
ScanResult measurement_angle_scan(const StateVector& s0, const StateVector& s1,
                                  const Prior& prior, std::size_t steps,
                                  bool polish = true);

/// Integral of t^(x_alpha - 1) e^(-t) / Gamma(x_alpha) over
/// [min(m0, m1), max(m0, m1)].
double quadrature_gamma_integral(const PoissonParams& m0, const PoissonParams& m1,
                                 std::size_t x_alpha);

}  // namespace reldec::oracle
