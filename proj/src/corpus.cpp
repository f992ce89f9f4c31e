#include "reldec/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace reldec {

namespace fs = std::filesystem;

namespace {

bool is_word_byte(unsigned char ch) {
    return (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
           ch >= 0x80;
}

std::ifstream open_input(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(path.string() + ": cannot open for reading");
    }
    return in;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t tab = line.find('\t', start);
        out.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) {
            return out;
        }
        start = tab + 1;
    }
}

[[noreturn]] void malformed(const fs::path& path, std::size_t line_no, const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

void Qrels::set(const std::string& topic_id, const std::string& doc_id, int relevance) {
    if (relevance != 0 && relevance != 1) {
        throw std::invalid_argument("relevance must be 0 or 1");
    }
    judgments_[{topic_id, doc_id}] = relevance;
}

std::optional<int> Qrels::judgment(const std::string& topic_id, const std::string& doc_id) const {
    const auto it = judgments_.find({topic_id, doc_id});
    if (it == judgments_.end()) {
        return std::nullopt;
    }
    return it->second;
}

int Qrels::relevance(const std::string& topic_id, const std::string& doc_id) const {
    return judgment(topic_id, doc_id).value_or(0);
}

std::uint64_t TermHistogram::total() const {
    std::uint64_t t = 0;
    for (const auto& [x, c] : counts) {
        t += c;
    }
    return t;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> words;
    std::string current;
    for (const char c : text) {
        const auto ch = static_cast<unsigned char>(c);
        if (is_word_byte(ch)) {
            current.push_back(ch < 0x80 ? static_cast<char>(std::tolower(ch)) : c);
        } else if (!current.empty()) {
            words.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        words.push_back(std::move(current));
    }
    return words;
}

std::vector<std::string> topic_words(const Topic& topic) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (auto& w : tokenize(topic.title + " " + topic.description)) {
        if (seen.insert(w).second) {
            out.push_back(std::move(w));
        }
    }
    return out;
}

TermIndex::TermIndex(const std::vector<Document>& docs) {
    std::set<std::string> ids;
    ids_.reserve(docs.size());
    counts_.reserve(docs.size());
    for (const auto& doc : docs) {
        if (doc.doc_id.empty()) {
            throw std::invalid_argument("document with empty id");
        }
        if (!ids.insert(doc.doc_id).second) {
            throw std::invalid_argument("duplicate document id: " + doc.doc_id);
        }
        ids_.push_back(doc.doc_id);
        auto& counts = counts_.emplace_back();
        for (auto& w : tokenize(doc.text)) {
            ++counts[std::move(w)];
        }
    }
}

std::size_t TermIndex::frequency(std::size_t doc, const std::string& word) const {
    const auto& counts = counts_.at(doc);
    const auto it = counts.find(word);
    return it == counts.end() ? 0 : it->second;
}

namespace {

std::optional<int> state_of(const Qrels& qrels, const std::string& topic_id,
                            const std::string& doc_id, UnjudgedPolicy policy) {
    auto j = qrels.judgment(topic_id, doc_id);
    if (!j && policy == UnjudgedPolicy::as_nonrelevant) {
        return 0;
    }
    return j;
}

}  // namespace

std::pair<std::size_t, std::size_t> judged_counts(const TermIndex& index, const Qrels& qrels,
                                                  const std::string& topic_id,
                                                  UnjudgedPolicy policy) {
    std::pair<std::size_t, std::size_t> n{0, 0};
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (const auto s = state_of(qrels, topic_id, index.doc_id(i), policy)) {
            ++(*s == 1 ? n.second : n.first);
        }
    }
    return n;
}

std::pair<TermHistogram, TermHistogram> term_histogram(const TermIndex& index,
                                                       const Qrels& qrels,
                                                       const std::string& topic_id,
                                                       const std::string& word,
                                                       UnjudgedPolicy policy) {
    TermHistogram h0{word, 0, {}};
    TermHistogram h1{word, 1, {}};
    for (std::size_t i = 0; i < index.size(); ++i) {
        const auto s = state_of(qrels, topic_id, index.doc_id(i), policy);
        if (!s) {
            continue;
        }
        ++(*s == 1 ? h1 : h0).counts[index.frequency(i, word)];
    }
    if (h0.counts.empty() || h1.counts.empty()) {
        throw std::domain_error("topic " + topic_id + " has no judged documents in state " +
                                (h0.counts.empty() ? "0" : "1"));
    }
    return {std::move(h0), std::move(h1)};
}

std::pair<TermHistogram, TermHistogram> term_histogram(const std::vector<Document>& docs,
                                                       const Qrels& qrels,
                                                       const std::string& topic_id,
                                                       const std::string& word,
                                                       UnjudgedPolicy policy) {
    return term_histogram(TermIndex(docs), qrels, topic_id, word, policy);
}

std::vector<Document> load_documents(const fs::path& path) {
    std::vector<Document> docs;
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path)) {
            if (entry.is_regular_file()) {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            auto in = open_input(file);
            std::ostringstream text;
            text << in.rdbuf();
            docs.push_back({file.stem().string(), text.str()});
        }
    } else {
        auto in = open_input(path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            line = strip_cr(std::move(line));
            if (line.empty()) {
                continue;
            }
            const std::size_t tab = line.find('\t');
            if (tab == std::string::npos || tab == 0) {
                malformed(path, line_no, "expected `doc_id<TAB>text`");
            }
            docs.push_back({line.substr(0, tab), line.substr(tab + 1)});
        }
    }
    std::set<std::string> ids;
    for (const auto& d : docs) {
        if (!ids.insert(d.doc_id).second) {
            throw std::runtime_error(path.string() + ": duplicate document id " + d.doc_id);
        }
    }
    return docs;
}

Qrels load_qrels(const fs::path& path) {
    auto in = open_input(path);
    Qrels qrels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string topic, iteration, doc, rel_text, extra;
        if (!(fields >> topic)) {
            continue;  // blank
        }
        if (!(fields >> iteration >> doc >> rel_text) || (fields >> extra)) {
            malformed(path, line_no, "expected `topic_id iteration doc_id relevance`");
        }
        int rel = 0;
        try {
            std::size_t used = 0;
            rel = std::stoi(rel_text, &used);
            if (used != rel_text.size()) {
                throw std::invalid_argument(rel_text);
            }
        } catch (const std::exception&) {
            malformed(path, line_no, "relevance `" + rel_text + "` is not an integer");
        }
        qrels.set(topic, doc, rel > 0 ? 1 : 0);
    }
    return qrels;
}

std::vector<Topic> load_topics(const fs::path& path) {
    auto in = open_input(path);
    std::vector<Topic> topics;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(std::move(line));
        if (line.empty()) {
            continue;
        }
        auto cols = split_tabs(line);
        if (cols.size() < 2 || cols.size() > 3 || cols[0].empty()) {
            malformed(path, line_no, "expected `topic_id<TAB>title<TAB>description`");
        }
        cols.resize(3);
        topics.push_back({cols[0], cols[1], cols[2]});
    }
    return topics;
}

}  // namespace reldec
