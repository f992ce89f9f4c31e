#include <doctest.h>

#include <cmath>
#include <random>

#include "reldec/oracle.hpp"
#include "test_util.hpp"

using namespace reldec;

TEST_CASE("exhaustive_subset_error") {
    const Pmf t0({0.2, 0.8}), t1({0.0, 1.0});
    const auto r = oracle::exhaustive_subset_error(t0, t1, Prior(0.5));
    CHECK_NEAR(r.best_value, 0.4, 1e-15);
    CHECK(r.best_subset == std::vector<std::size_t>{1});
    CHECK(r.evaluations == 4);

    CHECK_NEAR(oracle::exhaustive_subset_error(t0, t0, Prior(0.5)).best_value, 0.5, 1e-15);

    const Pmf d0({0.3, 0.7, 0.0, 0.0}), d1({0.0, 0.0, 0.4, 0.6});
    const auto dis = oracle::exhaustive_subset_error(d0, d1, Prior(0.5));
    CHECK(dis.best_value == 0.0);
    CHECK(dis.best_subset == std::vector<std::size_t>{2, 3});

    std::vector<double> wide(22, 0.0);
    wide[0] = 1.0;
    CHECK_THROWS_AS(oracle::exhaustive_subset_error(Pmf(wide), t0, Prior(0.5)),
                    std::invalid_argument);
}

TEST_CASE("exhaustive subsets beat every upper-tail test") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> c(0, 5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        Counts h0, h1;
        for (std::size_t x = 0; x < 9; ++x) {
            h0[x] = static_cast<std::uint64_t>(c(rng));
            h1[x] = static_cast<std::uint64_t>(c(rng));
        }
        h0[0] += 1;
        h1[8] += 1;
        const auto [p0, p1] = common_support(empirical_pmf(h0), empirical_pmf(h1));
        const Prior prior(u(rng));
        const double best = oracle::exhaustive_subset_error(p0, p1, prior).best_value;
        for (std::size_t x = 0; x <= p0.size(); ++x) {
            CHECK(best <= error_point(operating_point(p0, p1, Threshold{x}), prior).p_error + 1e-15);
        }
    }
}

TEST_CASE("measurement_angle_scan") {
    const StateVector m0 = embed(Pmf({0.2, 0.8})), m1 = embed(Pmf({0.0, 1.0}));
    const auto r = oracle::measurement_angle_scan(m0, m1, Prior(0.5), 100000);
    CHECK_NEAR(r.best_value, 0.27639320225002103, 1e-6);
    CHECK(r.evaluations >= 100000);

    const StateVector a({1.0, 0.0}), b({0.0, 1.0});
    for (const double xi : {0.2, 0.5, 0.8}) {
        CHECK_NEAR(oracle::measurement_angle_scan(a, b, Prior(xi), 1000).best_value, 0.0, 1e-12);
    }

    const StateVector neg({-1.0, 0.0});
    CHECK_NEAR(oracle::measurement_angle_scan(a, a, Prior(0.3), 1000).best_value, 0.3, 1e-15);
    CHECK_NEAR(oracle::measurement_angle_scan(a, neg, Prior(0.3), 1000).best_value, 0.3, 1e-15);

    CHECK_THROWS_AS(oracle::measurement_angle_scan(a, b, Prior(0.5), 999), std::invalid_argument);
    CHECK_THROWS_AS(oracle::measurement_angle_scan(a, StateVector({0.0, 0.0, 1.0}), Prior(0.5), 1000),
                    std::invalid_argument);
}

TEST_CASE("angle scan refinement never increases the grid minimum") {
    std::mt19937_64 rng(47);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> v0(4), v1(4);
        double n0 = 0, n1 = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            v0[i] = g(rng);
            v1[i] = g(rng);
            n0 += v0[i] * v0[i];
            n1 += v1[i] * v1[i];
        }
        for (std::size_t i = 0; i < 4; ++i) {
            v0[i] /= std::sqrt(n0);
            v1[i] /= std::sqrt(n1);
        }
        const StateVector s0(v0), s1(v1);
        const Prior prior(0.1 + 0.8 * (trial % 9) / 8.0);
        double prev = 2.0;
        for (std::size_t steps = 1000; steps <= 64000; steps *= 2) {
            const double v = oracle::measurement_angle_scan(s0, s1, prior, steps, false).best_value;
            CHECK(v <= prev);
            prev = v;
        }
        // Polishing converges to the same basin regardless of the grid.
        const double coarse = oracle::measurement_angle_scan(s0, s1, prior, 1000).best_value;
        const double fine = oracle::measurement_angle_scan(s0, s1, prior, 64000).best_value;
        CHECK_NEAR(coarse, fine, 1e-12);
    }
}

TEST_CASE("quadrature_gamma_integral") {
    const PoissonParams one(1.0), four(4.0);
    // mpmath: 0.68159529737506146
    const double v = oracle::quadrature_gamma_integral(one, four, 3);
    CHECK_NEAR(v, 0.68159529737506146, 1e-10);
    CHECK_NEAR(0.5 * (1.0 - v), 0.15920235131246927, 1e-10);

    CHECK(oracle::quadrature_gamma_integral(four, four, 3) == 0.0);
    CHECK(oracle::quadrature_gamma_integral(four, one, 3) ==
          oracle::quadrature_gamma_integral(one, four, 3));
    CHECK_THROWS_AS(oracle::quadrature_gamma_integral(one, four, 0), std::invalid_argument);
}
