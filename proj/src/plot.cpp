#include "reldec/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace reldec {

namespace fs = std::filesystem;

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Keeps file names portable.
std::string sanitize(const std::string& s) {
    std::string out;
    for (const char c : s) {
        const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
                        (c >= 'A' && c <= 'Z') || c == '-' || c == '_' || c == '.';
        out += ok ? c : '_';
    }
    return out.empty() ? "_" : out;
}

std::string xml_escape(const std::string& in) {
    std::string out;
    for (const char c : in) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error(path.string() + ": cannot open for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::runtime_error(path.string() + ": write failed");
    }
}

}  // namespace

std::vector<PlotTable> plot_tables(const std::vector<SweepRow>& rows) {
    // (topic, alpha) -> word -> xi -> (pe, qe); std::map keeps output ordered.
    using Curve = std::map<double, std::pair<double, double>>;
    std::map<std::pair<std::string, double>, std::map<std::string, Curve>> groups;
    std::map<std::pair<std::string, double>, std::vector<std::string>> word_order;
    for (const auto& r : rows) {
        const auto key = std::pair{r.topic_id, r.alpha};
        auto& words = groups[key];
        if (!words.contains(r.word)) {
            word_order[key].push_back(r.word);
        }
        words[r.word][r.xi] = {r.pe, r.qe};
    }

    std::vector<PlotTable> tables;
    for (const auto& [key, words] : groups) {
        PlotTable t;
        t.topic_id = key.first;
        t.alpha = key.second;
        t.words = word_order[key];
        const Curve& first = words.at(t.words.front());
        for (const auto& [xi, _] : first) {
            t.xi.push_back(xi);
        }
        for (const auto& w : t.words) {
            const Curve& curve = words.at(w);
            if (curve.size() != t.xi.size()) {
                throw std::invalid_argument("word " + w + " of topic " + t.topic_id +
                                            " has a different xi grid");
            }
            auto& pe = t.pe.emplace_back();
            auto& qe = t.qe.emplace_back();
            std::size_t i = 0;
            for (const auto& [xi, v] : curve) {
                if (xi != t.xi[i++]) {
                    throw std::invalid_argument("word " + w + " of topic " + t.topic_id +
                                                " has a different xi grid");
                }
                pe.push_back(v.first);
                qe.push_back(v.second);
            }
        }
        tables.push_back(std::move(t));
    }
    return tables;
}

std::string plot_file_stem(const PlotTable& table) {
    return sanitize(table.topic_id) + "_alpha" + fmt2(table.alpha);
}

std::vector<fs::path> emit_plot_data(const std::vector<SweepRow>& rows, const fs::path& dir,
                                     bool svg) {
    if (rows.empty()) {
        throw std::invalid_argument("no sweep rows to plot");
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error(dir.string() + ": " + ec.message());
    }
    std::vector<fs::path> written;
    for (const auto& t : plot_tables(rows)) {
        std::ostringstream out;
        out << "xi";
        for (const auto& w : t.words) {
            out << "\tpe:" << w << "\tqe:" << w;
        }
        out << '\n';
        for (std::size_t i = 0; i < t.xi.size(); ++i) {
            out << fmt6(t.xi[i]);
            for (std::size_t w = 0; w < t.words.size(); ++w) {
                out << '\t' << fmt6(t.pe[w][i]) << '\t' << fmt6(t.qe[w][i]);
            }
            out << '\n';
        }
        const fs::path data = dir / (plot_file_stem(t) + ".tsv");
        write_file(data, out.str());
        written.push_back(data);
        if (svg) {
            const fs::path image = dir / (plot_file_stem(t) + ".svg");
            write_file(image, render_svg(t));
            written.push_back(image);
        }
    }
    return written;
}

std::string render_svg(const PlotTable& t) {
    constexpr double width = 640, height = 420, margin = 50;
    constexpr const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                       "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    double ymax = 0.0;
    for (std::size_t w = 0; w < t.words.size(); ++w) {
        ymax = std::max({ymax, *std::max_element(t.pe[w].begin(), t.pe[w].end()),
                         *std::max_element(t.qe[w].begin(), t.qe[w].end())});
    }
    ymax = ymax > 0.0 ? ymax : 1.0;
    auto px = [&](double xi) { return margin + xi * (width - 2 * margin); };
    auto py = [&](double v) { return height - margin - v / ymax * (height - 2 * margin); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<text x=\"" << margin << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">topic "
      << xml_escape(t.topic_id) << ", alpha = " << fmt2(t.alpha)
      << " (solid: classical P_e, dashed: vector Q_e)</text>\n";
    s << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" font-family=\"sans-serif\" font-size=\"12\">xi</text>\n";
    s << "<text x=\"8\" y=\"" << margin << "\" font-family=\"sans-serif\" font-size=\"12\">"
      << fmt2(ymax) << "</text>\n";
    for (std::size_t w = 0; w < t.words.size(); ++w) {
        const char* colour = palette[w % std::size(palette)];
        for (const bool vector_series : {false, true}) {
            const auto& ys = vector_series ? t.qe[w] : t.pe[w];
            s << "<polyline fill=\"none\" stroke=\"" << colour << "\""
              << (vector_series ? " stroke-dasharray=\"5,3\"" : "") << " points=\"";
            for (std::size_t i = 0; i < t.xi.size(); ++i) {
                s << fmt2(px(t.xi[i])) << ',' << fmt2(py(ys[i])) << ' ';
            }
            s << "\"/>\n";
        }
        s << "<text x=\"" << width - margin + 4 << "\" y=\"" << margin + 14.0 * double(w)
          << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << colour << "\">"
          << xml_escape(t.words[w]) << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace reldec
