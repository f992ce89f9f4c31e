#pragma once

// Per-topic-word sweep comparing classical and vector-space error
// probabilities over sizes alpha and priors xi.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "reldec/corpus.hpp"

namespace reldec {

struct SweepRow {
    std::string topic_id;
    std::string word;
    double alpha = 0.0;  ///< nominal size
    double xi = 0.0;
    double delta = 0.0;
    double p0 = 0.0;  ///< achieved classical size
    double pd = 0.0;
    double pe = 0.0;
    double pc = 0.0;
    double qe = 0.0;
    double qc = 0.0;
};

/// Arithmetic grid start, start + step, ..., stop (inclusive within rounding).
std::vector<double> arithmetic_grid(double start, double stop, double step);

/// Parses `start:stop:step`.
std::vector<double> parse_grid(const std::string& spec);

struct SweepConfig {
    std::vector<double> alphas{0.25, 0.50, 0.75};
    std::vector<double> xi_grid = arithmetic_grid(0.01, 0.99, 0.01);
    UnjudgedPolicy unjudged = UnjudgedPolicy::exclude;
    /// Allow grid values at 0 and 1.
    bool wide_grid = false;
    /// Worker threads over (topic, word) pairs; 0 or 1 runs inline.
    unsigned threads = 1;

    void validate() const;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<std::string> warnings;
};

SweepResult run_sweep(const std::vector<Document>& docs, const Qrels& qrels,
                      const std::vector<Topic>& topics, const SweepConfig& config);

/// Rows for one word given its two state histograms.
std::vector<SweepRow> sweep_word(const std::string& topic_id, const TermHistogram& h0,
                                 const TermHistogram& h1, const SweepConfig& config);

struct AuditViolation {
    std::size_t row = 0;
    std::string what;
};

/// Re-checks complement sums, Q_e <= P_e and the power dominance at the
/// achieved size, each within 1e-12.
std::vector<AuditViolation> audit(const std::vector<SweepRow>& rows);

inline constexpr const char* kCsvHeader = "topic,word,alpha,xi,delta,p0,pd,pe,pc,qe,qc";

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);
std::vector<SweepRow> read_csv(std::istream& in);
std::vector<SweepRow> read_csv(const std::filesystem::path& path);

}  // namespace reldec
