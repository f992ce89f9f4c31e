#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>

#include "reldec/classical.hpp"
#include "reldec/corpus.hpp"
#include "reldec/distributions.hpp"
#include "reldec/experiment.hpp"
#include "reldec/oracle.hpp"
#include "reldec/quantum.hpp"
#include "reldec/selfcheck.hpp"

namespace py = pybind11;
using namespace reldec;

namespace {

std::vector<double> to_list(const Pmf& p) { return {p.probs().begin(), p.probs().end()}; }

std::vector<OperatingPoint> to_points(const std::vector<std::pair<double, double>>& pts) {
    std::vector<OperatingPoint> out;
    for (const auto& [size, power] : pts) {
        out.emplace_back(size, power);
    }
    return out;
}

py::dict row_dict(const SweepRow& r) {
    py::dict d;
    d["topic"] = r.topic_id;
    d["word"] = r.word;
    d["alpha"] = r.alpha;
    d["xi"] = r.xi;
    d["delta"] = r.delta;
    d["p0"] = r.p0;
    d["pd"] = r.pd;
    d["pe"] = r.pe;
    d["pc"] = r.pc;
    d["qe"] = r.qe;
    d["qc"] = r.qc;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Classical and vector-space binary relevance decisions";

    m.def("auto_cutoff", [](double mean) { return auto_cutoff(PoissonParams(mean)); },
          py::arg("m"));
    m.def(
        "poisson_pmf",
        [](double mean, std::optional<std::size_t> max_value) {
            const PoissonParams p(mean);
            return to_list(poisson_pmf(p, max_value.value_or(auto_cutoff(p))));
        },
        py::arg("m"), py::arg("max_value") = py::none());
    m.def("empirical_pmf", [](const Counts& h) { return to_list(empirical_pmf(h)); },
          py::arg("histogram"));

    m.def(
        "np_threshold",
        [](std::vector<double> p0, std::vector<double> p1, double alpha) {
            return np_threshold(Pmf(std::move(p0)), Pmf(std::move(p1)), alpha).x_alpha;
        },
        py::arg("pmf0"), py::arg("pmf1"), py::arg("alpha"));
    m.def(
        "operating_point",
        [](std::vector<double> p0, std::vector<double> p1, std::size_t x_alpha) {
            const auto op = operating_point(Pmf(std::move(p0)), Pmf(std::move(p1)),
                                            Threshold{x_alpha});
            return std::pair{op.size, op.power};
        },
        py::arg("pmf0"), py::arg("pmf1"), py::arg("x_alpha"));
    m.def(
        "error_point",
        [](double size, double power, double xi) {
            const auto e = error_point(OperatingPoint(size, power), Prior(xi));
            return std::pair{e.p_error, e.p_correct};
        },
        py::arg("size"), py::arg("power"), py::arg("xi"));
    m.def(
        "poisson_error_sum",
        [](double m0, double m1, std::size_t x_alpha) {
            const auto e = poisson_error_sum(PoissonParams(m0), PoissonParams(m1), Threshold{x_alpha});
            return std::pair{e.p_error, e.p_correct};
        },
        py::arg("m0"), py::arg("m1"), py::arg("x_alpha"));
    m.def(
        "min_error_envelope",
        [](const std::vector<std::pair<double, double>>& pts, double xi) {
            const auto pts_ = to_points(pts);
            const auto v = min_error_envelope(pts_, Prior(xi));
            return std::pair{v.error.p_error, v.index};
        },
        py::arg("points"), py::arg("xi"));
    m.def(
        "envelope_breakpoints",
        [](const std::vector<std::pair<double, double>>& pts) {
            std::vector<double> out;
            for (const auto& p : envelope_breakpoints(to_points(pts))) {
                out.push_back(p.xi());
            }
            return out;
        },
        py::arg("points"));
    m.def(
        "bayes_error",
        [](std::vector<double> p0, std::vector<double> p1, double xi) {
            return bayes_error(Pmf(std::move(p0)), Pmf(std::move(p1)), Prior(xi)).p_error;
        },
        py::arg("pmf0"), py::arg("pmf1"), py::arg("xi"));

    m.def(
        "embed",
        [](std::vector<double> p) {
            const auto s = embed(Pmf(std::move(p)));
            return std::vector<double>(s.amplitudes().begin(), s.amplitudes().end());
        },
        py::arg("pmf"));
    m.def(
        "overlap",
        [](std::vector<double> s0, std::vector<double> s1) {
            return overlap(StateVector(std::move(s0)), StateVector(std::move(s1))).delta();
        },
        py::arg("s0"), py::arg("s1"));
    m.def(
        "poisson_overlap",
        [](double m0, double m1) {
            return poisson_overlap(PoissonParams(m0), PoissonParams(m1)).delta();
        },
        py::arg("m0"), py::arg("m1"));
    m.def(
        "helstrom_error",
        [](double delta, double xi) {
            const auto e = helstrom_error(Overlap(delta), Prior(xi));
            return std::pair{e.p_error, e.p_correct};
        },
        py::arg("delta"), py::arg("xi"));
    m.def(
        "optimal_measurement",
        [](std::vector<double> s0_, std::vector<double> s1_, double xi) {
            const StateVector s0(std::move(s0_)), s1(std::move(s1_));
            const auto b = optimal_measurement(s0, s1, Prior(xi));
            const auto op = measurement_operating_point(b, s0, s1);
            py::dict d;
            d["mu0"] = b.mu0;
            d["mu1"] = b.mu1;
            d["gamma"] = b.gamma;
            d["theta"] = b.theta;
            d["eta0"] = b.eta0;
            d["eta1"] = b.eta1;
            d["eigen_accept"] = b.eigen_accept;
            d["eigen_reject"] = b.eigen_reject;
            d["size"] = op.size;
            d["power"] = op.power;
            return d;
        },
        py::arg("s0"), py::arg("s1"), py::arg("xi"));
    m.def("optimal_angle", &optimal_angle, py::arg("gamma"));
    m.def(
        "quantum_power_at_size",
        [](double delta, double alpha) { return quantum_power_at_size(Overlap(delta), alpha); },
        py::arg("delta"), py::arg("alpha"));

    m.def(
        "exhaustive_subset_error",
        [](std::vector<double> p0, std::vector<double> p1, double xi) {
            const auto r = oracle::exhaustive_subset_error(Pmf(std::move(p0)), Pmf(std::move(p1)),
                                                           Prior(xi));
            return std::pair{r.best_value, r.best_subset};
        },
        py::arg("pmf0"), py::arg("pmf1"), py::arg("xi"));
    m.def(
        "measurement_angle_scan",
        [](std::vector<double> s0, std::vector<double> s1, double xi, std::size_t steps) {
            return oracle::measurement_angle_scan(StateVector(std::move(s0)),
                                                  StateVector(std::move(s1)), Prior(xi), steps)
                .best_value;
        },
        py::arg("s0"), py::arg("s1"), py::arg("xi"), py::arg("steps") = 100000);
    m.def(
        "quadrature_gamma_integral",
        [](double m0, double m1, std::size_t x_alpha) {
            return oracle::quadrature_gamma_integral(PoissonParams(m0), PoissonParams(m1), x_alpha);
        },
        py::arg("m0"), py::arg("m1"), py::arg("x_alpha"));

    m.def("tokenize", [](const std::string& s) { return tokenize(s); }, py::arg("text"));
    m.def(
        "topic_words",
        [](const std::string& title, const std::string& description) {
            return topic_words(Topic{"", title, description});
        },
        py::arg("title"), py::arg("description") = "");
    m.def(
        "run_sweep",
        [](const std::filesystem::path& docs, const std::filesystem::path& qrels,
           const std::filesystem::path& topics, std::optional<std::vector<double>> alphas,
           std::optional<std::vector<double>> xis, bool unjudged_nonrelevant) {
            SweepConfig config;
            if (alphas) {
                config.alphas = *alphas;
            }
            if (xis) {
                config.xi_grid = *xis;
            }
            if (unjudged_nonrelevant) {
                config.unjudged = UnjudgedPolicy::as_nonrelevant;
            }
            const auto result = run_sweep(load_documents(docs), load_qrels(qrels),
                                          load_topics(topics), config);
            py::list rows;
            for (const auto& r : result.rows) {
                rows.append(row_dict(r));
            }
            return py::make_tuple(rows, result.warnings, audit(result.rows).size());
        },
        py::arg("docs"), py::arg("qrels"), py::arg("topics"), py::arg("alphas") = py::none(),
        py::arg("xis") = py::none(), py::arg("unjudged_nonrelevant") = false);
    m.def(
        "run_property_suite",
        [](std::uint64_t seed, std::size_t cases) {
            py::list out;
            for (const auto& r : run_property_suite(seed, cases)) {
                py::dict d;
                d["name"] = r.name;
                d["cases"] = r.cases;
                d["comparisons"] = r.comparisons;
                d["violations"] = r.violations;
                d["worst"] = r.worst;
                d["passed"] = r.passed();
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = 42, py::arg("cases") = 1000);
}
