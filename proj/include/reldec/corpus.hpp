#pragma once

// Documents, topics and relevance judgments, and the per-word term-frequency
// histograms derived from them.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reldec/distributions.hpp"

namespace reldec {

struct Document {
    std::string doc_id;
    std::string text;
};

struct Topic {
    std::string topic_id;
    std::string title;
    std::string description;
};

/// Binary relevance judgments keyed by (topic_id, doc_id).
class Qrels {
public:
    void set(const std::string& topic_id, const std::string& doc_id, int relevance);

    /// Judged state, or nullopt when the pair was never judged.
    std::optional<int> judgment(const std::string& topic_id, const std::string& doc_id) const;

    /// Judged state, with unjudged pairs read as non-relevant.
    int relevance(const std::string& topic_id, const std::string& doc_id) const;

    std::size_t size() const noexcept { return judgments_.size(); }

private:
    std::map<std::pair<std::string, std::string>, int> judgments_;
};

enum class UnjudgedPolicy { exclude, as_nonrelevant };

struct TermHistogram {
    std::string word;
    int state = 0;
    Counts counts;

    std::uint64_t total() const;
};

/// Lowercased alphanumeric runs; every other ASCII character separates.
std::vector<std::string> tokenize(std::string_view text);

/// Unique words of title + description, in first-occurrence order.
std::vector<std::string> topic_words(const Topic& topic);

/// Tokenized documents: per-document word counts, kept alongside the ids.
class TermIndex {
public:
    explicit TermIndex(const std::vector<Document>& docs);

    std::size_t size() const noexcept { return ids_.size(); }
    const std::string& doc_id(std::size_t i) const { return ids_[i]; }
    std::size_t frequency(std::size_t doc, const std::string& word) const;

private:
    std::vector<std::string> ids_;
    std::vector<std::map<std::string, std::size_t, std::less<>>> counts_;
};

/// (state 0, state 1) histograms of how many judged documents contain `word`
/// exactly x times. Throws std::domain_error if a state has no documents.
std::pair<TermHistogram, TermHistogram> term_histogram(
    const TermIndex& index, const Qrels& qrels, const std::string& topic_id,
    const std::string& word, UnjudgedPolicy policy = UnjudgedPolicy::exclude);

std::pair<TermHistogram, TermHistogram> term_histogram(
    const std::vector<Document>& docs, const Qrels& qrels, const std::string& topic_id,
    const std::string& word, UnjudgedPolicy policy = UnjudgedPolicy::exclude);

/// Number of documents judged in each state for a topic.
std::pair<std::size_t, std::size_t> judged_counts(const TermIndex& index, const Qrels& qrels,
                                                  const std::string& topic_id,
                                                  UnjudgedPolicy policy);

/// A directory of plain-text files (stem = doc_id) or a `doc_id<TAB>text` TSV.
std::vector<Document> load_documents(const std::filesystem::path& path);

/// TREC qrels: `topic_id iteration doc_id relevance` per line.
Qrels load_qrels(const std::filesystem::path& path);

/// `topic_id<TAB>title<TAB>description` per line.
std::vector<Topic> load_topics(const std::filesystem::path& path);

}  // namespace reldec
