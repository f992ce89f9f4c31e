#include "reldec/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "reldec/classical.hpp"
#include "reldec/oracle.hpp"
#include "reldec/quantum.hpp"

namespace reldec {

namespace {

constexpr double kInequalitySlack = 1e-12;

const std::vector<double> kNinePriors{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

CheckReport make_report(std::string name, double tolerance) {
    CheckReport r;
    r.name = std::move(name);
    r.tolerance = tolerance;
    r.worst = -std::numeric_limits<double>::infinity();
    return r;
}

// Records a discrepancy; anything above the report tolerance is a violation.
void record(CheckReport& r, double discrepancy) {
    ++r.comparisons;
    r.worst = std::max(r.worst, discrepancy);
    if (!(discrepancy <= r.tolerance)) {
        ++r.violations;
    }
}

double uniform_open_ten(std::mt19937_64& rng) {
    // (0, 10]
    return 10.0 * (1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

StateVector random_state(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> g;
    std::vector<double> v(dim);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (auto& x : v) {
            x = g(rng);
            n2 += x * x;
        }
    } while (n2 < 1e-6);
    const double n = std::sqrt(n2);
    for (auto& x : v) {
        x /= n;
    }
    return StateVector(std::move(v));
}

}  // namespace

std::vector<double> percent_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 99; ++i) {
        g.push_back(i / 100.0);
    }
    return g;
}

std::vector<PoissonTuple> random_poisson_tuples(std::mt19937_64& rng, std::size_t count,
                                                std::size_t x_min, std::size_t x_max) {
    std::uniform_int_distribution<std::size_t> pick(x_min, x_max);
    std::vector<PoissonTuple> out(count);
    for (auto& t : out) {
        t.m0 = uniform_open_ten(rng);
        t.m1 = uniform_open_ten(rng);
        t.x_alpha = pick(rng);
    }
    return out;
}

std::pair<Pmf, Pmf> random_pmf_pair(std::mt19937_64& rng, std::size_t max_value) {
    std::uniform_int_distribution<std::size_t> pick_n(1, max_value);
    std::uniform_int_distribution<int> pick_count(0, 9);
    std::bernoulli_distribution empty(0.3);
    auto draw = [&](std::size_t n) {
        Counts c;
        for (std::size_t x = 0; x <= n; ++x) {
            c[x] = empty(rng) ? 0 : static_cast<std::uint64_t>(pick_count(rng));
        }
        if (std::all_of(c.begin(), c.end(), [](const auto& kv) { return kv.second == 0; })) {
            c[std::uniform_int_distribution<std::size_t>(0, n)(rng)] = 1;
        }
        return empirical_pmf(c);
    };
    const std::size_t n = pick_n(rng);
    Pmf a = draw(n);
    Pmf b = draw(n);
    return common_support(a, b);
}

std::vector<CheckReport> check_helstrom(std::mt19937_64& rng, std::size_t pairs,
                                        std::size_t steps) {
    auto scan = make_report("helstrom: angle-scan oracle vs closed form", 1e-6);
    auto eig = make_report("helstrom: eigenbasis error vs closed form", 1e-9);
    auto geom = make_report("helstrom: basis orthonormal, eta0 + gamma + eta1 = pi/2", 1e-9);
    std::uniform_int_distribution<std::size_t> pick_dim(2, 10);
    for (std::size_t i = 0; i < pairs; ++i) {
        StateVector s0({1.0}), s1({1.0});
        do {
            if (i % 2 == 0) {
                const std::size_t dim = pick_dim(rng);
                s0 = random_state(rng, dim);
                s1 = random_state(rng, dim);
            } else {
                const auto [p0, p1] = random_pmf_pair(rng, 12);
                s0 = embed(p0);
                s1 = embed(p1);
            }
        } while (1.0 - overlap(s0, s1).delta() < 1e-6);
        const Overlap delta = overlap(s0, s1);
        ++scan.cases;
        ++eig.cases;
        ++geom.cases;
        for (const double xi : kNinePriors) {
            const Prior prior(xi);
            const double closed = helstrom_error(delta, prior).p_error;
            record(scan, std::abs(oracle::measurement_angle_scan(s0, s1, prior, steps).best_value -
                                  closed));
            const MeasurementBasis b = optimal_measurement(s0, s1, prior);
            const double composed =
                error_point(measurement_operating_point(b, s0, s1), prior).p_error;
            record(eig, std::abs(composed - closed));

            double d01 = 0.0, n0 = 0.0, n1 = 0.0;
            for (std::size_t k = 0; k < s0.size(); ++k) {
                d01 += b.mu0[k] * b.mu1[k];
                n0 += b.mu0[k] * b.mu0[k];
                n1 += b.mu1[k] * b.mu1[k];
            }
            record(geom, std::max({std::abs(d01), std::abs(n0 - 1.0), std::abs(n1 - 1.0),
                                   std::abs(b.eta0 + b.gamma + b.eta1 - std::numbers::pi / 2)}));
        }
    }
    return {scan, eig, geom};
}

CheckReport check_error_dominance(const std::vector<PoissonTuple>& tuples) {
    auto r = make_report("poisson error: Q_e <= P_e and Q_c >= P_c", kInequalitySlack);
    const auto grid = percent_grid();
    for (const auto& t : tuples) {
        const PoissonParams m0(t.m0), m1(t.m1);
        const std::size_t n = auto_cutoff(PoissonParams(std::max(t.m0, t.m1)));
        const Pmf p0 = poisson_pmf(m0, n);
        const Pmf p1 = poisson_pmf(m1, n);
        const OperatingPoint op = operating_point(p0, p1, Threshold{t.x_alpha});
        const Overlap delta = poisson_overlap(m0, m1);
        ++r.cases;
        for (const double xi : grid) {
            const Prior prior(xi);
            const ErrorPoint p = error_point(op, prior);
            const ErrorPoint q = helstrom_error(delta, prior);
            record(r, q.p_error - p.p_error);
            record(r, p.p_correct - q.p_correct);
        }
        // Equiprobable states with the orientation-aware region.
        const ErrorPoint p = poisson_error_sum(m0, m1, Threshold{t.x_alpha});
        const ErrorPoint q = helstrom_error(delta, Prior(0.5));
        record(r, q.p_error - p.p_error);
        record(r, p.p_correct - q.p_correct);
    }
    return r;
}

CheckReport check_power_dominance(const std::vector<PoissonTuple>& tuples) {
    auto r = make_report("poisson power: Q_d >= P_d at Q_0 = P_0", kInequalitySlack);
    for (const auto& t : tuples) {
        const PoissonParams m0(t.m0), m1(t.m1);
        const std::size_t n = auto_cutoff(PoissonParams(std::max(t.m0, t.m1)));
        const OperatingPoint op =
            operating_point(poisson_pmf(m0, n), poisson_pmf(m1, n), Threshold{t.x_alpha});
        const Overlap delta = poisson_overlap(m0, m1);
        ++r.cases;
        record(r, op.power - quantum_power_at_size(delta, op.size));
    }
    return r;
}

std::vector<CheckReport> check_distribution_free(std::mt19937_64& rng, std::size_t pairs,
                                                  std::size_t max_value) {
    auto tails = make_report("empirical: Q_e <= every upper-tail test error", kInequalitySlack);
    auto bayes = make_report("empirical: Q_e <= bayes_error", kInequalitySlack);
    auto subset = make_report("empirical: Q_e <= exhaustive-subset error", kInequalitySlack);
    auto agree = make_report("empirical: bayes_error == exhaustive-subset error", 1e-12);
    auto power = make_report("empirical: Q_d >= P_d at Q_0 = P_0, every threshold",
                             kInequalitySlack);
    const auto grid = percent_grid();
    for (std::size_t i = 0; i < pairs; ++i) {
        const auto [p0, p1] = random_pmf_pair(rng, max_value);
        const Overlap delta = overlap(embed(p0), embed(p1));
        std::vector<OperatingPoint> ops;
        for (std::size_t x = 0; x <= p0.size(); ++x) {
            ops.push_back(operating_point(p0, p1, Threshold{x}));
            record(power, ops.back().power - quantum_power_at_size(delta, ops.back().size));
        }
        for (const double xi : grid) {
            const Prior prior(xi);
            const double qe = helstrom_error(delta, prior).p_error;
            for (const auto& op : ops) {
                record(tails, qe - error_point(op, prior).p_error);
            }
            record(bayes, qe - bayes_error(p0, p1, prior).p_error);
        }
        for (const double xi : kNinePriors) {
            const Prior prior(xi);
            const double best = oracle::exhaustive_subset_error(p0, p1, prior).best_value;
            record(subset, helstrom_error(delta, prior).p_error - best);
            record(agree, std::abs(bayes_error(p0, p1, prior).p_error - best));
        }
        for (auto* r : {&tails, &bayes, &subset, &agree, &power}) {
            ++r->cases;
        }
    }
    return {tails, bayes, subset, agree, power};
}

CheckReport check_gamma_identity(std::mt19937_64& rng, std::size_t cases) {
    auto r = make_report("gamma: finite sums vs gamma-integral quadrature", 1e-8);
    for (const auto& t : random_poisson_tuples(rng, cases, 1, 20)) {
        const PoissonParams m0(t.m0), m1(t.m1);
        const double sum_form = poisson_error_sum(m0, m1, Threshold{t.x_alpha}).p_error;
        const double integral = oracle::quadrature_gamma_integral(m0, m1, t.x_alpha);
        ++r.cases;
        record(r, std::abs(sum_form - 0.5 * (1.0 - integral)));
    }
    return r;
}

std::vector<CheckReport> run_property_suite(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    std::vector<CheckReport> out;
    const std::size_t helstrom_pairs = std::max<std::size_t>(1, cases / 5);
    for (auto& r : check_helstrom(rng, helstrom_pairs)) {
        out.push_back(std::move(r));
    }
    const auto tuples = random_poisson_tuples(rng, cases, 0, 20);
    out.push_back(check_error_dominance(tuples));
    out.push_back(check_power_dominance(tuples));
    for (auto& r : check_distribution_free(rng, cases)) {
        out.push_back(std::move(r));
    }
    out.push_back(check_gamma_identity(rng, std::max<std::size_t>(1, cases * 2 / 5)));
    return out;
}

}  // namespace reldec
