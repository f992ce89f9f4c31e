#include "reldec/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "reldec/classical.hpp"
#include "reldec/quantum.hpp"

namespace reldec {

namespace {

constexpr double kAuditTolerance = 1e-12;

double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": `" + text + "` is not a number");
    }
}

bool row_less(const SweepRow& a, const SweepRow& b) {
    return std::tie(a.topic_id, a.word, a.alpha, a.xi) <
           std::tie(b.topic_id, b.word, b.alpha, b.xi);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                out.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                out.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    return out;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::vector<double> arithmetic_grid(double start, double stop, double step) {
    if (!(step > 0.0) || !(stop >= start)) {
        throw std::invalid_argument("grid needs step > 0 and stop >= start");
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        // Multiples of the step, rounded to 12 decimals so 0.01 * 29 prints as 0.29.
        grid[i] = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
    }
    return grid;
}

std::vector<double> parse_grid(const std::string& spec) {
    const std::size_t a = spec.find(':');
    const std::size_t b = a == std::string::npos ? a : spec.find(':', a + 1);
    if (b == std::string::npos || spec.find(':', b + 1) != std::string::npos) {
        throw std::invalid_argument("grid `" + spec + "` must look like start:stop:step");
    }
    return arithmetic_grid(parse_double(spec.substr(0, a), "grid start"),
                           parse_double(spec.substr(a + 1, b - a - 1), "grid stop"),
                           parse_double(spec.substr(b + 1), "grid step"));
}

void SweepConfig::validate() const {
    if (alphas.empty() || xi_grid.empty()) {
        throw std::invalid_argument("sweep needs at least one alpha and one xi");
    }
    auto inside = [&](double v) {
        return wide_grid ? (v >= 0.0 && v <= 1.0) : (v > 0.0 && v < 1.0);
    };
    for (const double a : alphas) {
        if (!inside(a)) {
            throw std::invalid_argument("alpha " + fixed6(a) + " outside (0, 1)");
        }
    }
    for (const double x : xi_grid) {
        if (!inside(x)) {
            throw std::invalid_argument("xi " + fixed6(x) +
                                        " outside (0, 1); pass --wide-grid to allow endpoints");
        }
    }
}

std::vector<SweepRow> sweep_word(const std::string& topic_id, const TermHistogram& h0,
                                 const TermHistogram& h1, const SweepConfig& config) {
    const auto [pmf0, pmf1] = common_support(empirical_pmf(h0.counts), empirical_pmf(h1.counts));
    const Overlap delta = overlap(embed(pmf0), embed(pmf1));

    std::vector<SweepRow> rows;
    rows.reserve(config.alphas.size() * config.xi_grid.size());
    for (const double alpha : config.alphas) {
        const OperatingPoint op = operating_point(pmf0, pmf1, np_threshold(pmf0, pmf1, alpha));
        for (const double xi : config.xi_grid) {
            const Prior prior(xi);
            const ErrorPoint p = error_point(op, prior);
            const ErrorPoint q = helstrom_error(delta, prior);
            rows.push_back({topic_id, h0.word, alpha, xi, delta.delta(), op.size, op.power,
                            p.p_error, p.p_correct, q.p_error, q.p_correct});
        }
    }
    return rows;
}

SweepResult run_sweep(const std::vector<Document>& docs, const Qrels& qrels,
                      const std::vector<Topic>& topics, const SweepConfig& config) {
    config.validate();
    const TermIndex index(docs);

    struct Task {
        const Topic* topic;
        std::string word;
    };
    SweepResult result;
    std::vector<Task> tasks;
    for (const auto& topic : topics) {
        const auto [n0, n1] = judged_counts(index, qrels, topic.topic_id, config.unjudged);
        if (n0 == 0 || n1 == 0) {
            result.warnings.push_back("topic " + topic.topic_id +
                                      " skipped: no judged documents in state " +
                                      (n0 == 0 ? "0" : "1"));
            continue;
        }
        for (auto& w : topic_words(topic)) {
            tasks.push_back({&topic, std::move(w)});
        }
    }

    std::vector<std::vector<SweepRow>> slots(tasks.size());
    auto work = [&](std::size_t i) {
        const auto& task = tasks[i];
        const auto [h0, h1] =
            term_histogram(index, qrels, task.topic->topic_id, task.word, config.unjudged);
        slots[i] = sweep_word(task.topic->topic_id, h0, h1, config);
    };

    const unsigned workers = std::min<std::size_t>(std::max(config.threads, 1u), tasks.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            work(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
                    try {
                        work(i);
                    } catch (...) {
                        if (!failed.exchange(true)) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
        pool.clear();
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    for (auto& slot : slots) {
        std::move(slot.begin(), slot.end(), std::back_inserter(result.rows));
    }
    std::stable_sort(result.rows.begin(), result.rows.end(), row_less);
    return result;
}

std::vector<AuditViolation> audit(const std::vector<SweepRow>& rows) {
    std::vector<AuditViolation> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& r = rows[i];
        if (std::abs(r.pe + r.pc - 1.0) > kAuditTolerance) {
            out.push_back({i, "pe + pc != 1"});
        }
        if (std::abs(r.qe + r.qc - 1.0) > kAuditTolerance) {
            out.push_back({i, "qe + qc != 1"});
        }
        if (r.qe > r.pe + kAuditTolerance) {
            out.push_back({i, "qe > pe"});
        }
        if (r.qc < r.pc - kAuditTolerance) {
            out.push_back({i, "qc < pc"});
        }
        const double qd = quantum_power_at_size(Overlap(r.delta), r.p0);
        if (qd < r.pd - kAuditTolerance) {
            out.push_back({i, "quantum power at achieved size below pd"});
        }
    }
    return out;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << csv_field(r.topic_id) << ',' << csv_field(r.word);
        for (const double v : {r.alpha, r.xi, r.delta, r.p0, r.pd, r.pe, r.pc, r.qe, r.qc}) {
            out << ',' << fixed6(v);
        }
        out << '\n';
    }
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error(path.string() + ": cannot open for writing");
    }
    write_csv(rows, out);
    out.flush();
    if (!out) {
        throw std::runtime_error(path.string() + ": write failed");
    }
}

std::vector<SweepRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::runtime_error("sweep CSV must start with header `" + std::string(kCsvHeader) +
                                 "`");
    }
    std::vector<SweepRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 11) {
            throw std::runtime_error("sweep CSV line " + std::to_string(line_no) +
                                     ": expected 11 fields, got " + std::to_string(f.size()));
        }
        const std::string ctx = "sweep CSV line " + std::to_string(line_no);
        rows.push_back({f[0], f[1], parse_double(f[2], ctx), parse_double(f[3], ctx),
                        parse_double(f[4], ctx), parse_double(f[5], ctx),
                        parse_double(f[6], ctx), parse_double(f[7], ctx),
                        parse_double(f[8], ctx), parse_double(f[9], ctx),
                        parse_double(f[10], ctx)});
    }
    return rows;
}

std::vector<SweepRow> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(path.string() + ": cannot open for reading");
    }
    try {
        return read_csv(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

}  // namespace reldec
