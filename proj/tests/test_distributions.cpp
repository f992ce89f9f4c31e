#include <doctest.h>

#include <cmath>
#include <random>

#include "reldec/distributions.hpp"
#include "reldec/oracle.hpp"
#include "test_util.hpp"

using namespace reldec;

namespace {

// Tail mass above n by forward recursion in long double, independent of the
// log-space evaluation used by the library.
long double tail_oracle(long double m, std::size_t n) {
    long double term = std::exp(-m);
    for (std::size_t x = 1; x <= n; ++x) {
        term *= m / static_cast<long double>(x);
    }
    long double tail = 0.0L;
    for (std::size_t x = n + 1; x < n + 2000; ++x) {
        term *= m / static_cast<long double>(x);
        tail += term;
    }
    return tail;
}

}  // namespace

TEST_CASE("poisson_pmf values") {
    const Pmf p1 = poisson_pmf(PoissonParams(1.0), 50);
    CHECK(p1.max_value() == 50);
    CHECK_NEAR(p1[0], std::exp(-1.0), 1e-15);
    CHECK_NEAR(p1[2], std::exp(-1.0) / 2.0, 1e-15);

    // mpmath, 40 digits: e^-4 4^3 / 3!
    const Pmf p4 = poisson_pmf(PoissonParams(4.0), 60);
    CHECK_NEAR(p4[3], 0.19536681481316459, 1e-15);
}

TEST_CASE("poisson_pmf rejects bad input") {
    CHECK_THROWS_AS(PoissonParams(0.0), std::invalid_argument);
    CHECK_THROWS_AS(PoissonParams(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(PoissonParams(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(PoissonParams{INFINITY}, std::invalid_argument);
    // Tail beyond 10 for m = 4 is about 2.8e-3.
    CHECK_THROWS_AS(poisson_pmf(PoissonParams(4.0), 10), std::invalid_argument);
}

TEST_CASE("auto_cutoff") {
    const std::size_t n1 = auto_cutoff(PoissonParams(1.0));
    CHECK(n1 >= 50);
    CHECK(tail_oracle(1.0L, n1) < 1e-12L);

    CHECK(auto_cutoff(PoissonParams(100.0)) >= 220);

    const std::size_t n4 = auto_cutoff(PoissonParams(4.0));
    CHECK(tail_oracle(4.0L, n4) < 1e-12L);

    // Large means still produce a valid pmf.
    for (const double m : {0.001, 10.0, 250.0, 1000.0}) {
        const PoissonParams p(m);
        const std::size_t n = auto_cutoff(p);
        CHECK(n >= static_cast<std::size_t>(std::ceil(m + 12.0 * std::sqrt(m))));
        CHECK_NOTHROW(poisson_pmf(p, n));
    }
}

TEST_CASE("empirical_pmf") {
    const Pmf a = empirical_pmf({{0, 1}, {1, 4}});
    REQUIRE(a.size() == 2);
    CHECK_NEAR(a[0], 0.2, 1e-15);
    CHECK_NEAR(a[1], 0.8, 1e-15);

    const Pmf b = empirical_pmf({{3, 7}});
    REQUIRE(b.size() == 4);
    CHECK(b[3] == 1.0);
    CHECK(b[0] == 0.0);
    CHECK(b[1] == 0.0);
    CHECK(b[2] == 0.0);

    const Pmf c = empirical_pmf({{0, 2}, {2, 2}, {5, 4}});
    const std::vector<double> expected{0.25, 0, 0.25, 0, 0, 0.5};
    CHECK(std::vector<double>(c.probs().begin(), c.probs().end()) == expected);

    // Zero counts at the top do not extend the range.
    CHECK(empirical_pmf({{0, 3}, {9, 0}}).max_value() == 0);

    CHECK_THROWS_AS(empirical_pmf({}), std::invalid_argument);
    CHECK_THROWS_AS(empirical_pmf({{0, 0}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("empirical_pmf is scale invariant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> count(0, 20);
    for (int trial = 0; trial < 200; ++trial) {
        Counts h;
        for (std::size_t x = 0; x < 8; ++x) {
            h[x] = static_cast<std::uint64_t>(count(rng));
        }
        h[3] += 1;
        for (const std::uint64_t k : {2u, 3u, 17u}) {
            Counts scaled;
            for (const auto& [x, c] : h) {
                scaled[x] = c * k;
            }
            CHECK(empirical_pmf(scaled) == empirical_pmf(h));
        }
    }
}

TEST_CASE("Pmf validation and padding") {
    CHECK_THROWS_AS(Pmf({}), std::invalid_argument);
    CHECK_THROWS_AS(Pmf({0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(Pmf({-0.1, 1.1}), std::invalid_argument);
    CHECK_THROWS_AS(Pmf({0.5, std::nan("")}), std::invalid_argument);
    CHECK_NOTHROW(Pmf({0.5, 0.5 + 5e-10}));

    const Pmf p({0.25, 0.75});
    const Pmf q = p.padded_to(4);
    CHECK(q.max_value() == 4);
    CHECK(q[1] == 0.75);
    CHECK(q[4] == 0.0);
    CHECK_THROWS_AS(q.padded_to(2), std::invalid_argument);

    const auto [a, b] = common_support(Pmf({1.0}), Pmf({0.5, 0.0, 0.5}));
    CHECK(a.size() == 3);
    CHECK(b.size() == 3);
}

TEST_CASE("constructed pmfs sum to one") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mean(0.01, 50.0);
    for (int trial = 0; trial < 100; ++trial) {
        const PoissonParams p(mean(rng));
        const Pmf pmf = poisson_pmf(p, auto_cutoff(p));
        double total = 0.0;
        for (const double v : pmf.probs()) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            total += v;
        }
        CHECK_NEAR(total, 1.0, 1e-9);
    }
}

TEST_CASE("poisson cumulative sums match incomplete-gamma quadrature") {
    // P(X >= k | m) equals the gamma integral over (0, m].
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const PoissonParams near_zero(1e-300);
    for (int trial = 0; trial < 60; ++trial) {
        const double m = 10.0 * (1.0 - u(rng));
        const PoissonParams p(m);
        const Pmf pmf = poisson_pmf(p, auto_cutoff(p));
        double upper = 1.0;
        for (std::size_t k = 1; k <= 20; ++k) {
            upper -= pmf[k - 1];
            const double integral = oracle::quadrature_gamma_integral(near_zero, p, k);
            CHECK_NEAR(upper, integral, 1e-8);
        }
    }
}
