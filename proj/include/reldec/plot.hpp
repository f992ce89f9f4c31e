#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "reldec/experiment.hpp"

namespace reldec {

/// Error curves against xi for every word of one (topic, alpha) pair.
struct PlotTable {
    std::string topic_id;
    double alpha = 0.0;
    std::vector<double> xi;
    std::vector<std::string> words;
    std::vector<std::vector<double>> pe;  // [word][xi]
    std::vector<std::vector<double>> qe;  // [word][xi]
};

/// Groups sweep rows by (topic, alpha). Every word of a group must cover the
/// same xi grid.
std::vector<PlotTable> plot_tables(const std::vector<SweepRow>& rows);

/// `<topic>_alpha<alpha>.tsv` file name for a table.
std::string plot_file_stem(const PlotTable& table);

/// Writes one tab-separated file per table, header `xi pe:<w> qe:<w> ...`
/// followed by one line per xi. With `svg`, also writes a rendering of the
/// same curves. Returns the written paths.
std::vector<std::filesystem::path> emit_plot_data(const std::vector<SweepRow>& rows,
                                                  const std::filesystem::path& dir,
                                                  bool svg = false);

std::string render_svg(const PlotTable& table);

}  // namespace reldec
