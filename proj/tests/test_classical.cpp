#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "reldec/classical.hpp"
#include "reldec/oracle.hpp"
#include "test_util.hpp"

using namespace reldec;

namespace {

struct PoissonPair {
    Pmf p0;
    Pmf p1;
};

PoissonPair poisson_1_4() {
    const std::size_t n = auto_cutoff(PoissonParams(4.0));
    return {poisson_pmf(PoissonParams(1.0), n), poisson_pmf(PoissonParams(4.0), n)};
}

// Upper tail by straightforward left-to-right cumulative sum.
double tail_by_cumsum(const Pmf& p, std::size_t from) {
    double below = 0.0;
    for (std::size_t x = 0; x < from && x < p.size(); ++x) {
        below += p[x];
    }
    return 1.0 - below;
}

Pmf random_pmf(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> c(0, 6);
    Counts h;
    for (std::size_t x = 0; x <= n; ++x) {
        h[x] = static_cast<std::uint64_t>(c(rng));
    }
    h[n / 2] += 1;
    return empirical_pmf(h);
}

const std::vector<OperatingPoint> kFigurePoints{
    {0.25, 1.0 / 3.0}, {0.5, 2.0 / 3.0}, {0.75, 0.8}};

}  // namespace

TEST_CASE("np_threshold on Poisson(1) vs Poisson(4)") {
    const auto [p0, p1] = poisson_1_4();
    // Oracle: P(X >= 2 | 1) = 0.2642 > 0.25 and P(X >= 3 | 1) = 0.0803 <= 0.25.
    CHECK(tail_by_cumsum(p0, 2) > 0.25);
    CHECK(tail_by_cumsum(p0, 3) <= 0.25);
    CHECK(np_threshold(p0, p1, 0.25).x_alpha == 3);

    CHECK(np_threshold(p0, p1, 1.0).x_alpha == 0);
    // Size 0 stops where the remaining tail is negligible.
    const std::size_t x0 = np_threshold(p0, p1, 0.0).x_alpha;
    CHECK(tail_by_cumsum(p0, x0) <= 1e-12);
    CHECK(tail_by_cumsum(p0, x0 - 1) > 1e-12);

    CHECK_THROWS_AS(np_threshold(p0, p1, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(np_threshold(p0, p1, -0.1), std::invalid_argument);
}

TEST_CASE("np_threshold agrees with the cumulative-sum oracle") {
    const auto [p0, p1] = poisson_1_4();
    for (int i = 0; i <= 100; ++i) {
        const double alpha = i / 100.0;
        std::size_t expected = p0.size();
        for (std::size_t x = 0; x <= p0.size(); ++x) {
            if (tail_by_cumsum(p0, x) <= alpha + 1e-12) {
                expected = x;
                break;
            }
        }
        CHECK(np_threshold(p0, p1, alpha).x_alpha == expected);
    }
}

TEST_CASE("operating_point") {
    const auto [p0, p1] = poisson_1_4();
    // mpmath: 1 - e^-1 (1 + 1 + 1/2), 1 - e^-4 (1 + 4 + 8)
    const OperatingPoint op = operating_point(p0, p1, Threshold{3});
    CHECK_NEAR(op.size, 0.080301397071394196, 1e-12);
    CHECK_NEAR(op.power, 0.76189669444645566, 1e-12);

    const OperatingPoint all = operating_point(p0, p1, Threshold{0});
    CHECK_NEAR(all.size, 1.0, 1e-12);
    CHECK_NEAR(all.power, 1.0, 1e-12);

    const OperatingPoint none = operating_point(p0, p1, Threshold{p0.size()});
    CHECK(none.size == 0.0);
    CHECK(none.power == 0.0);

    CHECK_THROWS_AS(operating_point(p0, p1, Threshold{p0.size() + 1}), std::invalid_argument);
}

TEST_CASE("operating_point is monotone in the threshold") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto [p0, p1] = common_support(random_pmf(rng, 8), random_pmf(rng, 10));
        OperatingPoint prev = operating_point(p0, p1, Threshold{0});
        for (std::size_t x = 1; x <= p0.size(); ++x) {
            const OperatingPoint op = operating_point(p0, p1, Threshold{x});
            CHECK(op.size <= prev.size);
            CHECK(op.power <= prev.power);
            prev = op;
        }
    }
}

TEST_CASE("error_point") {
    const ErrorPoint e = error_point(OperatingPoint(0.080301397071394196, 0.76189669444645566),
                                     Prior(0.5));
    CHECK_NEAR(e.p_error, 0.15920235131246927, 1e-12);
    CHECK_NEAR(e.p_error + e.p_correct, 1.0, 1e-12);

    const OperatingPoint op(0.3, 0.7);
    CHECK_NEAR(error_point(op, Prior(0.0)).p_error, 1.0 - 0.7, 1e-15);
    CHECK_NEAR(error_point(op, Prior(1.0)).p_error, 0.3, 1e-15);

    // Arithmetic on the worked example's stated operating point.
    const ErrorPoint w = error_point(OperatingPoint(0.2, 0.8), Prior(0.5));
    CHECK_NEAR(w.p_error, 0.2, 1e-15);
    CHECK_NEAR(w.p_correct, 0.8, 1e-15);

    CHECK_THROWS_AS(Prior(1.01), std::invalid_argument);
    CHECK_THROWS_AS(OperatingPoint(0.5, -0.2), std::invalid_argument);
}

TEST_CASE("ErrorPoint complement holds exactly as constructed") {
    for (int i = 0; i <= 1000; ++i) {
        const ErrorPoint e = ErrorPoint::from_error(i / 1000.0);
        CHECK(e.p_error + e.p_correct == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("poisson_error_sum") {
    const PoissonParams one(1.0), four(4.0);
    CHECK_NEAR(poisson_error_sum(one, four, Threshold{3}).p_error, 0.15920235131246927, 1e-12);
    CHECK_NEAR(poisson_error_sum(one, four, Threshold{1}).p_error, 0.32521809885864593, 1e-12);
    CHECK_NEAR(poisson_error_sum(one, one, Threshold{3}).p_error, 0.5, 1e-15);
    CHECK_NEAR(poisson_error_sum(one, four, Threshold{0}).p_error, 0.5, 1e-12);

    // The swapped orientation accepts the lower tail, mirroring the integral.
    CHECK_NEAR(poisson_error_sum(four, one, Threshold{3}).p_error,
               poisson_error_sum(one, four, Threshold{3}).p_error, 1e-14);

    const ErrorPoint e = poisson_error_sum(one, four, Threshold{5});
    CHECK_NEAR(e.p_error + e.p_correct, 1.0, 1e-15);
}

TEST_CASE("poisson_error_sum equals the quadrature form") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> k(1, 20);
    for (int trial = 0; trial < 150; ++trial) {
        const PoissonParams m0(10.0 * (1.0 - u(rng))), m1(10.0 * (1.0 - u(rng)));
        const std::size_t x = k(rng);
        const double integral = oracle::quadrature_gamma_integral(m0, m1, x);
        CHECK_NEAR(poisson_error_sum(m0, m1, Threshold{x}).p_error, 0.5 * (1.0 - integral), 1e-8);
    }
}

TEST_CASE("min_error_envelope") {
    const auto a = min_error_envelope(kFigurePoints, Prior(0.2));
    CHECK_NEAR(a.error.p_error, 0.31, 1e-12);
    CHECK(a.index == 2);

    const auto b = min_error_envelope(kFigurePoints, Prior(0.9));
    CHECK_NEAR(b.error.p_error, 0.9 * 0.25 + 0.1 * (2.0 / 3.0), 1e-12);
    CHECK(b.index == 0);

    const std::vector<OperatingPoint> single{{0.4, 0.9}};
    const auto c = min_error_envelope(single, Prior(0.3));
    CHECK_NEAR(c.error.p_error, 0.3 * 0.4 + 0.7 * 0.1, 1e-15);
    CHECK(c.index == 0);

    // Ties resolve to the lowest index.
    const std::vector<OperatingPoint> tied{{0.5, 0.5}, {0.2, 0.2}, {0.5, 0.5}};
    CHECK(min_error_envelope(tied, Prior(0.5)).index == 0);

    CHECK_THROWS_AS(min_error_envelope(std::vector<OperatingPoint>{}, Prior(0.5)),
                    std::invalid_argument);
}

TEST_CASE("envelope equals the pointwise minimum and is concave") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<OperatingPoint> pts;
        for (int i = 0; i < 5; ++i) {
            pts.emplace_back(u(rng), u(rng));
        }
        std::vector<double> values;
        for (int i = 1; i <= 99; ++i) {
            const double xi = i / 100.0;
            double brute = 2.0;
            for (const auto& p : pts) {
                brute = std::min(brute, xi * p.size + (1.0 - xi) * (1.0 - p.power));
            }
            const double env = min_error_envelope(pts, Prior(xi)).error.p_error;
            CHECK_NEAR(env, brute, 1e-15);
            values.push_back(env);
        }
        for (std::size_t i = 1; i + 1 < values.size(); ++i) {
            CHECK(values[i - 1] + values[i + 1] - 2.0 * values[i] <= 1e-12);
        }
    }
}

TEST_CASE("envelope_breakpoints") {
    const auto xs = envelope_breakpoints(kFigurePoints);
    REQUIRE(xs.size() == 2);
    CHECK_NEAR(xs[0].xi(), 4.0 / 7.0, 1e-12);
    CHECK_NEAR(xs[1].xi(), 8.0 / 23.0, 1e-12);

    // Adjacent lines meet at their breakpoint.
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK_NEAR(error_point(kFigurePoints[i], xs[i]).p_error,
                   error_point(kFigurePoints[i + 1], xs[i]).p_error, 1e-12);
    }

    const std::vector<OperatingPoint> same{{0.3, 0.6}, {0.3, 0.6}};
    CHECK_THROWS_AS(envelope_breakpoints(same), std::domain_error);
    const std::vector<OperatingPoint> unsorted{{0.5, 0.6}, {0.3, 0.4}};
    CHECK_THROWS_AS(envelope_breakpoints(unsorted), std::invalid_argument);
}

TEST_CASE("argmin changes across each breakpoint of the worked example") {
    // Both breakpoints lie on the lower envelope for these points; the segment
    // order along xi is 2, 1, 0.
    const auto xs = envelope_breakpoints(kFigurePoints);
    for (const auto& bp : xs) {
        const double below = std::floor(bp.xi() * 100.0) / 100.0;
        const double above = below + 0.01;
        CHECK(min_error_envelope(kFigurePoints, Prior(below)).index !=
              min_error_envelope(kFigurePoints, Prior(above)).index);
    }
    CHECK(min_error_envelope(kFigurePoints, Prior(0.1)).index == 2);
    CHECK(min_error_envelope(kFigurePoints, Prior(0.45)).index == 1);
    CHECK(min_error_envelope(kFigurePoints, Prior(0.8)).index == 0);
}

TEST_CASE("bayes_error") {
    const Pmf t0({0.2, 0.8}), t1({0.0, 1.0});
    CHECK_NEAR(bayes_error(t0, t1, Prior(0.5)).p_error, 0.4, 1e-15);
    CHECK_NEAR(bayes_error(t0, t0, Prior(0.5)).p_error, 0.5, 1e-15);
    const Pmf d0({0.5, 0.5, 0.0}), d1({0.0, 0.0, 1.0});
    for (const double xi : {0.1, 0.5, 0.9}) {
        CHECK(bayes_error(d0, d1, Prior(xi)).p_error == 0.0);
    }
}

TEST_CASE("np_threshold and bayes_error match subset enumeration") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::size_t> pick_n(1, 12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = pick_n(rng);
        const auto [p0, p1] = common_support(random_pmf(rng, n), random_pmf(rng, n));
        const double alpha = u(rng);

        // Best power among upper-tail subsets with size <= alpha.
        const std::size_t count = std::size_t{1} << p0.size();
        double best_power = 0.0;
        for (std::size_t mask = 0; mask < count; ++mask) {
            const std::size_t lowest = mask == 0 ? p0.size() : std::countr_zero(mask);
            const bool upper_tail = mask == 0 || (mask >> lowest) + 1 == (count >> lowest);
            if (!upper_tail) {
                continue;
            }
            double size = 0.0, power = 0.0;
            for (std::size_t x = 0; x < p0.size(); ++x) {
                if (mask & (std::size_t{1} << x)) {
                    size += p0[x];
                    power += p1[x];
                }
            }
            if (size <= alpha + 1e-12) {
                best_power = std::max(best_power, power);
            }
        }
        const OperatingPoint op = operating_point(p0, p1, np_threshold(p0, p1, alpha));
        CHECK_NEAR(op.power, best_power, 1e-12);

        const Prior prior(u(rng));
        CHECK_NEAR(bayes_error(p0, p1, prior).p_error,
                   oracle::exhaustive_subset_error(p0, p1, prior).best_value, 1e-12);
    }
}
