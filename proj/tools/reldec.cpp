// reldec: classical vs vector-space binary relevance decisions.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "reldec/classical.hpp"
#include "reldec/corpus.hpp"
#include "reldec/distributions.hpp"
#include "reldec/experiment.hpp"
#include "reldec/oracle.hpp"
#include "reldec/plot.hpp"
#include "reldec/quantum.hpp"
#include "reldec/selfcheck.hpp"

namespace fs = std::filesystem;
using namespace reldec;

namespace {

std::string f6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string vec6(const std::vector<double>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + f6(v[i]);
    }
    return s + ")";
}

// Comma/whitespace separated numbers, inline or from a file.
std::vector<double> parse_numbers(const std::string& arg, const std::string& flag) {
    std::string text = arg;
    if (fs::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    for (char& c : text) {
        if (c == ',' || c == ';') {
            c = ' ';
        }
    }
    std::istringstream in(text);
    std::vector<double> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument(flag + ": `" + tok + "` is not a number");
        }
    }
    if (out.empty()) {
        throw std::invalid_argument(flag + ": no values given");
    }
    return out;
}

Pmf parse_pmf(const std::string& arg, const std::string& flag) {
    try {
        return Pmf(parse_numbers(arg, flag));
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        throw std::invalid_argument(msg.rfind(flag, 0) == 0 ? msg : flag + ": " + msg);
    }
}

int cmd_poisson(double m0_value, double m1_value, const std::vector<double>& alphas,
                double xi_value, bool explain) {
    const PoissonParams m0(m0_value), m1(m1_value);
    const Prior prior(xi_value);
    const std::size_t n = auto_cutoff(PoissonParams(std::max(m0_value, m1_value)));
    const Pmf p0 = poisson_pmf(m0, n);
    const Pmf p1 = poisson_pmf(m1, n);
    const Overlap delta = poisson_overlap(m0, m1);
    const ErrorPoint q = helstrom_error(delta, prior);

    std::cout << "m0 = " << m0_value << ", m1 = " << m1_value << ", xi = " << xi_value
              << ", cutoff N = " << n << "\n";
    std::cout << "delta = " << f6(delta.delta()) << "\n";
    std::cout << "Q_e = " << f6(q.p_error) << ", Q_c = " << f6(q.p_correct) << "\n";
    for (const double alpha : alphas) {
        const Threshold t = np_threshold(p0, p1, alpha);
        const OperatingPoint op = operating_point(p0, p1, t);
        const ErrorPoint p = error_point(op, prior);
        std::cout << "alpha = " << alpha << ": x_alpha = " << t.x_alpha << ", P_0 = " << f6(op.size)
                  << ", P_d = " << f6(op.power) << ", P_e = " << f6(p.p_error)
                  << ", P_c = " << f6(p.p_correct)
                  << ", Q_d at Q_0 = P_0: " << f6(quantum_power_at_size(delta, op.size)) << "\n";
    }
    if (explain) {
        const double bhatt = std::exp(-std::pow(std::sqrt(m1_value) - std::sqrt(m0_value), 2));
        const double naive = std::exp(-std::abs(m1_value - m0_value));
        std::cout << "\nexplain: delta is the squared overlap (sum_x sqrt(p(x|m0) p(x|m1)))^2,\n"
                  << "  summed directly over x = 0.." << n << ": " << f6(delta.delta()) << "\n"
                  << "  For Poisson states this series reduces to exp(-(sqrt(m1) - sqrt(m0))^2) = "
                  << f6(bhatt) << ".\n"
                  << "  The closed form exp(-|m1 - m0|) = " << f6(naive)
                  << " sometimes quoted for it does not\n"
                  << "  agree with the summation (differs by " << f6(std::abs(naive - delta.delta()))
                  << "); the summed value is used throughout.\n";
    }
    return 0;
}

int cmd_binary(const std::string& pmf0_arg, const std::string& pmf1_arg,
               const std::vector<double>& alphas, double xi_value, std::size_t steps,
               const std::string& compare, bool explain) {
    const auto [p0, p1] = common_support(parse_pmf(pmf0_arg, "--pmf0"), parse_pmf(pmf1_arg, "--pmf1"));
    const Prior prior(xi_value);
    const StateVector s0 = embed(p0), s1 = embed(p1);
    const Overlap delta = overlap(s0, s1);

    std::cout << "observable values 0.." << p0.max_value() << ", xi = " << xi_value << "\n";
    std::cout << "classical thresholds (accept x >= x_alpha):\n";
    for (std::size_t x = 0; x <= p0.size(); ++x) {
        const OperatingPoint op = operating_point(p0, p1, Threshold{x});
        std::cout << "  x_alpha = " << x << ": P_0 = " << f6(op.size) << ", P_d = " << f6(op.power)
                  << ", P_e = " << f6(error_point(op, prior).p_error) << "\n";
    }
    for (const double alpha : alphas) {
        const Threshold t = np_threshold(p0, p1, alpha);
        const OperatingPoint op = operating_point(p0, p1, t);
        std::cout << "  size " << alpha << " -> x_alpha = " << t.x_alpha
                  << ", P_e = " << f6(error_point(op, prior).p_error) << "\n";
    }
    std::cout << "bayes error (best acceptance subset) = " << f6(bayes_error(p0, p1, prior).p_error)
              << "\n";
    if (p0.max_value() <= oracle::kMaxSubsetValue) {
        const auto scan = oracle::exhaustive_subset_error(p0, p1, prior);
        std::cout << "  oracle: exhaustive subsets = " << f6(scan.best_value) << " via {";
        for (std::size_t i = 0; i < scan.best_subset.size(); ++i) {
            std::cout << (i ? "," : "") << scan.best_subset[i];
        }
        std::cout << "}\n";
    }

    std::cout << "state vectors:\n  |m0> = " << vec6({s0.amplitudes().begin(), s0.amplitudes().end()})
              << "\n  |m1> = " << vec6({s1.amplitudes().begin(), s1.amplitudes().end()}) << "\n";
    std::cout << "delta = " << f6(delta.delta()) << "\n";
    const ErrorPoint q = helstrom_error(delta, prior);
    std::cout << "Helstrom bound: Q_e = " << f6(q.p_error) << ", Q_c = " << f6(q.p_correct) << "\n";
    if (1.0 - delta.delta() < kParallelTolerance) {
        std::cout << "states are parallel: no measurement beats min(xi, 1 - xi)\n";
        return 0;
    }
    const MeasurementBasis b = optimal_measurement(s0, s1, prior);
    const OperatingPoint qop = measurement_operating_point(b, s0, s1);
    std::cout << "optimal measurement:\n  mu1 (accept) = " << vec6(b.mu1)
              << ", eigenvalue " << f6(b.eigen_accept) << "\n  mu0 (reject) = " << vec6(b.mu0)
              << ", eigenvalue " << f6(b.eigen_reject) << "\n  gamma = " << f6(b.gamma)
              << ", theta = " << f6(b.theta) << ", eta0 = " << f6(b.eta0)
              << ", eta1 = " << f6(b.eta1) << "\n  Q_0 = " << f6(qop.size)
              << ", Q_d = " << f6(qop.power)
              << ", Q_e = " << f6(error_point(qop, prior).p_error) << "\n";
    const auto scan = oracle::measurement_angle_scan(s0, s1, prior, steps);
    std::cout << "  oracle: angle scan (" << scan.evaluations << " evaluations) = "
              << f6(scan.best_value) << "\n";

    if (!compare.empty()) {
        const auto mu = parse_numbers(compare, "--compare-basis");
        if (mu.size() != s0.size()) {
            throw std::invalid_argument("--compare-basis needs " + std::to_string(s0.size()) +
                                        " coordinates");
        }
        double norm = 0.0;
        for (const double v : mu) {
            norm += v * v;
        }
        MeasurementBasis other;
        other.mu1 = mu;
        for (auto& v : other.mu1) {
            v /= std::sqrt(norm);
        }
        const OperatingPoint op = measurement_operating_point(other, s0, s1);
        std::cout << "acceptance ray " << vec6(other.mu1) << ": Q_0 = " << f6(op.size)
                  << ", Q_d = " << f6(op.power)
                  << ", error = " << f6(error_point(op, prior).p_error) << "\n";
    }
    if (explain) {
        std::cout << "\nexplain: mu1/mu0 are the eigenvectors of (1 - xi)|m1><m1| - xi|m0><m0|\n"
                  << "  within span(|m0>, |m1>). Their error equals the Helstrom bound and the\n"
                  << "  angle-scan oracle; no acceptance subset of observable values reaches it\n"
                  << "  unless the states are orthogonal. Any other acceptance ray can be\n"
                  << "  evaluated with --compare-basis.\n";
    }
    return 0;
}

int cmd_sweep(const std::string& docs_path, const std::string& qrels_path,
              const std::string& topics_path, const std::string& out_dir, SweepConfig config,
              bool svg) {
    const auto docs = load_documents(docs_path);
    const auto qrels = load_qrels(qrels_path);
    const auto topics = load_topics(topics_path);
    const auto result = run_sweep(docs, qrels, topics, config);
    for (const auto& w : result.warnings) {
        std::cerr << "reldec: warning: " << w << "\n";
    }
    if (result.rows.empty()) {
        throw std::runtime_error("sweep produced no rows (no topic has judged documents in both states)");
    }
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error(out_dir + ": " + ec.message());
    }
    const fs::path csv = fs::path(out_dir) / "sweep.csv";
    emit_csv(result.rows, csv);
    const auto plots = emit_plot_data(result.rows, out_dir, svg);
    const auto violations = audit(result.rows);
    std::cout << "wrote " << result.rows.size() << " rows to " << csv.string() << " and "
              << plots.size() << " plot files to " << out_dir << "\n";
    if (!violations.empty()) {
        for (const auto& v : violations) {
            const auto& r = result.rows[v.row];
            std::cerr << "reldec: audit: row " << v.row << " (" << r.topic_id << ", " << r.word
                      << ", alpha " << r.alpha << ", xi " << r.xi << "): " << v.what << "\n";
        }
        std::cout << "audit FAILED: " << violations.size() << " violations\n";
        return 1;
    }
    std::cout << "audit passed: Q_e <= P_e, Q_c >= P_c and Q_d >= P_d at P_0 on every row\n";
    return 0;
}

int cmd_oracle(std::uint64_t seed, std::size_t cases) {
    const auto reports = run_property_suite(seed, cases);
    std::size_t failed = 0;
    for (const auto& r : reports) {
        failed += r.passed() ? 0 : 1;
        std::printf("%s  %-58s cases=%zu checks=%zu violations=%zu worst=%.3e tol=%.0e\n",
                    r.passed() ? "PASS" : "FAIL", r.name.c_str(), r.cases, r.comparisons,
                    r.violations, r.worst, r.tolerance);
    }
    std::printf("%zu passed, %zu failed\n", reports.size() - failed, failed);
    return failed == 0 ? 0 : 1;
}

int cmd_plot(const std::string& csv, const std::string& out_dir, bool svg) {
    const auto rows = read_csv(fs::path(csv));
    const auto written = emit_plot_data(rows, out_dir, svg);
    std::cout << "wrote " << written.size() << " plot files to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary relevance decisions: classical thresholds vs optimal vector measurements"};
    app.require_subcommand(1);

    double m0 = 0.0, m1 = 0.0, xi = 0.5;
    std::vector<double> alphas;
    bool explain = false;
    auto* poisson = app.add_subcommand("poisson", "Compare decisions for two Poisson term-frequency models");
    poisson->add_option("--m0", m0, "Expected term frequency in non-relevant documents")->required();
    poisson->add_option("--m1", m1, "Expected term frequency in relevant documents")->required();
    poisson->add_option("--alpha", alphas, "Test size (repeatable)");
    poisson->add_option("--xi", xi, "Prior probability of non-relevance")->capture_default_str();
    poisson->add_flag("--explain", explain, "Explain how the state overlap is computed");

    std::string pmf0, pmf1, compare;
    std::size_t steps = 100000;
    auto* binary = app.add_subcommand("binary", "Compare decisions for two explicit pmfs");
    binary->add_option("--pmf0", pmf0, "Non-relevant pmf: comma list or file")->required();
    binary->add_option("--pmf1", pmf1, "Relevant pmf: comma list or file")->required();
    binary->add_option("--alpha", alphas, "Test size (repeatable)");
    binary->add_option("--xi", xi, "Prior probability of non-relevance")->capture_default_str();
    binary->add_option("--steps", steps, "Angle-scan oracle grid size")->capture_default_str()
        ->check(CLI::Range(std::size_t{1000}, std::size_t{100000000}));
    binary->add_option("--compare-basis", compare, "Evaluate another acceptance ray (comma list)");
    binary->add_flag("--explain", explain, "Explain the optimal measurement");

    std::string docs, qrels, topics, out, xi_grid, unjudged = "exclude";
    std::vector<double> xis;
    bool svg = false, wide = false;
    unsigned threads = 1;
    auto* sweep = app.add_subcommand("sweep", "Run the per-topic-word sweep over a corpus");
    sweep->add_option("--docs", docs, "Directory of text files or doc_id<TAB>text file")
        ->required()->check(CLI::ExistingPath);
    sweep->add_option("--qrels", qrels, "TREC qrels file")->required()->check(CLI::ExistingFile);
    sweep->add_option("--topics", topics, "topic_id<TAB>title<TAB>description file")
        ->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", out, "Output directory")->required();
    sweep->add_option("--alpha", alphas, "Test size (repeatable; default 0.25 0.5 0.75)");
    auto* xi_opt = sweep->add_option("--xi", xis, "Prior (repeatable)");
    sweep->add_option("--xi-grid", xi_grid, "Prior grid start:stop:step (default 0.01:0.99:0.01)")
        ->excludes(xi_opt);
    sweep->add_option("--unjudged", unjudged, "Unjudged documents: exclude or nonrelevant")
        ->check(CLI::IsMember({"exclude", "nonrelevant"}))->capture_default_str();
    sweep->add_flag("--wide-grid", wide, "Allow priors and sizes at 0 and 1");
    sweep->add_flag("--svg", svg, "Also render SVG plots");
    sweep->add_option("--threads", threads, "Worker threads")->capture_default_str();

    std::uint64_t seed = 42;
    std::size_t cases = 1000;
    auto* oracle_cmd = app.add_subcommand("oracle", "Run the randomized property suite");
    oracle_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    oracle_cmd->add_option("--cases", cases, "Random cases per property")->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::string csv;
    auto* plot = app.add_subcommand("plot", "Regenerate plot data from a sweep CSV");
    plot->add_option("--csv", csv, "sweep.csv from a previous run")->required()->check(CLI::ExistingFile);
    plot->add_option("--out", out, "Output directory")->required();
    plot->add_flag("--svg", svg, "Also render SVG plots");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "reldec: error: " << e.what() << " (see --help)\n";
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    }

    try {
        if (*poisson) {
            return cmd_poisson(m0, m1, alphas.empty() ? std::vector<double>{0.25} : alphas, xi,
                               explain);
        }
        if (*binary) {
            return cmd_binary(pmf0, pmf1, alphas, xi, steps, compare, explain);
        }
        if (*sweep) {
            SweepConfig config;
            if (!alphas.empty()) {
                config.alphas = alphas;
            }
            if (!xis.empty()) {
                config.xi_grid = xis;
            } else if (!xi_grid.empty()) {
                config.xi_grid = parse_grid(xi_grid);
            }
            config.unjudged =
                unjudged == "nonrelevant" ? UnjudgedPolicy::as_nonrelevant : UnjudgedPolicy::exclude;
            config.wide_grid = wide;
            config.threads = threads;
            return cmd_sweep(docs, qrels, topics, out, config, svg);
        }
        if (*oracle_cmd) {
            return cmd_oracle(seed, cases);
        }
        if (*plot) {
            return cmd_plot(csv, out, svg);
        }
    } catch (const std::exception& e) {
        std::cerr << "reldec: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
