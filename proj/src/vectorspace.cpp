#include "sentiment/vectorspace.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "sentiment/errors.hpp"

namespace sentiment {

namespace {

constexpr std::string_view kVocabHeader = "#sentiment-vocab v1";

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_freq,
                       std::size_t n_docs)
    : terms_(std::move(terms)), doc_freq_(std::move(doc_freq)), n_docs_(n_docs) {
    if (terms_.size() != doc_freq_.size()) {
        throw DataError("vocabulary: term and doc_freq lists differ in length");
    }
    index_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (doc_freq_[i] < 1 || doc_freq_[i] > n_docs_) {
            throw DataError("vocabulary: doc_freq of '" + terms_[i] + "' is " +
                            std::to_string(doc_freq_[i]) + ", outside [1, " +
                            std::to_string(n_docs_) + "]");
        }
        if (!index_.emplace(terms_[i], i).second) {
            throw DataError("vocabulary: duplicate term '" + terms_[i] + "'");
        }
    }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view term) const {
    const auto it = index_.find(std::string(term));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string_view to_string(TfVariant v) noexcept {
    switch (v) {
    case TfVariant::Raw: return "RAW";
    case TfVariant::Log: return "LOG";
    case TfVariant::Augmented: return "AUGMENTED";
    case TfVariant::Binary: return "BINARY";
    }
    return "RAW";
}

std::optional<TfVariant> parse_tf_variant(std::string_view s) noexcept {
    std::string up(s);
    for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (TfVariant v : {TfVariant::Raw, TfVariant::Log, TfVariant::Augmented, TfVariant::Binary}) {
        if (up == to_string(v)) return v;
    }
    return std::nullopt;
}

double DocumentVector::weight_at(std::size_t index) const noexcept {
    const auto it = std::lower_bound(entries.begin(), entries.end(), index,
                                     [](const Entry& e, std::size_t i) { return e.index < i; });
    return (it != entries.end() && it->index == index) ? it->weight : 0.0;
}

Vocabulary build_vocabulary(const std::vector<ProcessedDocument>& docs,
                            const VocabularyPolicy& policy) {
    if (docs.empty()) throw DataError("cannot build a vocabulary from zero documents");

    std::map<std::string, std::size_t, std::less<>> df;
    for (const auto& doc : docs) {
        const std::set<std::string_view> distinct(doc.terms.begin(), doc.terms.end());
        for (auto t : distinct) ++df[std::string(t)];
    }

    std::vector<std::string> terms;
    std::vector<std::size_t> freqs;
    if (policy.manual_terms) {
        std::set<std::string_view> seen;
        for (const auto& t : *policy.manual_terms) {
            const auto it = df.find(t);
            if (it == df.end() || !seen.insert(t).second) continue;
            terms.push_back(t);
            freqs.push_back(it->second);
        }
    } else {
        if (policy.min_doc_freq < 1) throw UsageError("min_doc_freq must be at least 1");
        std::vector<std::pair<std::string, std::size_t>> kept;
        for (const auto& [term, n] : df) {
            if (n >= policy.min_doc_freq) kept.emplace_back(term, n);
        }
        // df map iteration is lexicographic, so a stable sort on frequency
        // leaves ties in lexicographic order.
        std::stable_sort(kept.begin(), kept.end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
        if (policy.max_terms && kept.size() > *policy.max_terms) kept.resize(*policy.max_terms);
        for (auto& [term, n] : kept) {
            terms.push_back(std::move(term));
            freqs.push_back(n);
        }
    }
    if (terms.empty()) throw DataError("vocabulary policy selected no terms");
    return Vocabulary(std::move(terms), std::move(freqs), docs.size());
}

std::size_t tf_raw(std::string_view term, const ProcessedDocument& doc) {
    return static_cast<std::size_t>(std::count(doc.terms.begin(), doc.terms.end(), term));
}

double tf_log(std::size_t f) noexcept {
    return f == 0 ? 0.0 : 1.0 + std::log(static_cast<double>(f));
}

double tf_augmented(std::string_view term, const ProcessedDocument& doc) {
    std::map<std::string_view, std::size_t> counts;
    std::size_t max_f = 0;
    for (const auto& t : doc.terms) max_f = std::max(max_f, ++counts[t]);
    if (max_f == 0) return 0.0;
    const auto it = counts.find(term);
    const double f = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    return 0.5 + 0.5 * f / static_cast<double>(max_f);
}

double idf(std::size_t ordinal, const Vocabulary& vocab) {
    if (ordinal >= vocab.size()) {
        throw DataError("idf: ordinal " + std::to_string(ordinal) + " outside vocabulary");
    }
    return std::log(static_cast<double>(vocab.n_docs()) /
                    static_cast<double>(vocab.doc_freq(ordinal)));
}

double idf(std::string_view term, const Vocabulary& vocab) {
    const auto ordinal = vocab.index_of(term);
    if (!ordinal) throw DataError("idf: term '" + std::string(term) + "' not in vocabulary");
    return idf(*ordinal, vocab);
}

DocumentVector vectorize(const ProcessedDocument& doc, const Vocabulary& vocab,
                         const WeightingScheme& scheme) {
    std::map<std::string_view, std::size_t> counts;
    std::size_t max_f = 0;
    for (const auto& t : doc.terms) max_f = std::max(max_f, ++counts[t]);

    DocumentVector v;
    v.doc_id = doc.id;
    v.label = doc.label;
    for (const auto& [term, f] : counts) {
        const auto ordinal = vocab.index_of(term);
        if (!ordinal) continue;
        double w = 0.0;
        switch (scheme.tf) {
        case TfVariant::Raw: w = static_cast<double>(f); break;
        case TfVariant::Log: w = tf_log(f); break;
        case TfVariant::Augmented:
            w = 0.5 + 0.5 * static_cast<double>(f) / static_cast<double>(max_f);
            break;
        case TfVariant::Binary: w = 1.0; break;
        }
        if (scheme.use_idf) w *= idf(*ordinal, vocab);
        if (w > 0.0) v.entries.push_back({*ordinal, w});
    }
    std::sort(v.entries.begin(), v.entries.end(),
              [](const auto& a, const auto& b) { return a.index < b.index; });
    return v;
}

DocumentVector l2_normalize(DocumentVector v) {
    double sq = 0.0;
    for (const auto& e : v.entries) sq += e.weight * e.weight;
    if (sq > 0.0) {
        const double norm = std::sqrt(sq);
        for (auto& e : v.entries) e.weight /= norm;
    }
    return v;
}

void save_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << kVocabHeader << " n_docs=" << vocab.n_docs() << '\n';
    for (std::size_t i = 0; i < vocab.size(); ++i) {
        out << vocab.term(i) << '\t' << vocab.doc_freq(i) << '\n';
    }
}

Vocabulary load_vocabulary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open vocabulary file " + path.string());
    std::string line;
    std::getline(in, line);
    const std::string prefix = std::string(kVocabHeader) + " n_docs=";
    if (!line.starts_with(prefix)) {
        throw DataError(path.string() + ": not a vocabulary file (expected header '" +
                        std::string(kVocabHeader) + "')");
    }
    std::size_t n_docs = 0;
    const auto tail = std::string_view(line).substr(prefix.size());
    if (std::from_chars(tail.data(), tail.data() + tail.size(), n_docs).ec != std::errc{}) {
        throw DataError(path.string() + ": bad n_docs in header");
    }
    std::vector<std::string> terms;
    std::vector<std::size_t> freqs;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto tab = line.rfind('\t');
        std::size_t df = 0;
        if (tab == std::string::npos ||
            std::from_chars(line.data() + tab + 1, line.data() + line.size(), df).ec != std::errc{}) {
            throw DataError(path.string() + ": line " + std::to_string(line_no) +
                            ": expected term<TAB>doc_freq");
        }
        terms.push_back(line.substr(0, tab));
        freqs.push_back(df);
    }
    return Vocabulary(std::move(terms), std::move(freqs), n_docs);
}

}  // namespace sentiment
