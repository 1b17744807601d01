#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sentiment/preprocess.hpp"

namespace sentiment {

/// Bag-of-words vocabulary: ordered distinct terms with document frequencies.
class Vocabulary {
public:
    Vocabulary() = default;

    /// Throws DataError unless every doc_freq lies in [1, n_docs] and the
    /// terms are distinct.
    Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_freq,
               std::size_t n_docs);

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t n_docs() const noexcept { return n_docs_; }

    const std::vector<std::string>& terms() const noexcept { return terms_; }
    const std::string& term(std::size_t ordinal) const { return terms_.at(ordinal); }
    std::size_t doc_freq(std::size_t ordinal) const { return doc_freq_.at(ordinal); }

    std::optional<std::size_t> index_of(std::string_view term) const;

    friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
        return a.terms_ == b.terms_ && a.doc_freq_ == b.doc_freq_ && a.n_docs_ == b.n_docs_;
    }

private:
    std::vector<std::string> terms_;
    std::vector<std::size_t> doc_freq_;
    std::size_t n_docs_ = 0;
    std::unordered_map<std::string, std::size_t> index_;
};

struct VocabularyPolicy {
    std::size_t min_doc_freq = 2;
    std::optional<std::size_t> max_terms;
    /// When set, the vocabulary is exactly these terms (in this order) that
    /// occur in at least one document; the frequency policy is ignored.
    std::optional<std::vector<std::string>> manual_terms;
};

enum class TfVariant { Raw, Log, Augmented, Binary };

std::string_view to_string(TfVariant v) noexcept;
std::optional<TfVariant> parse_tf_variant(std::string_view s) noexcept;

struct WeightingScheme {
    TfVariant tf = TfVariant::Raw;
    bool use_idf = true;

    friend bool operator==(const WeightingScheme&, const WeightingScheme&) = default;
};

/// Sparse weighted feature vector. Entries are sorted by ordinal, hold
/// strictly positive weights, and never repeat an ordinal.
struct DocumentVector {
    struct Entry {
        std::size_t index;
        double weight;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    std::uint64_t doc_id = 0;
    std::vector<Entry> entries;
    std::optional<Polarity> label;

    double weight_at(std::size_t index) const noexcept;

    friend bool operator==(const DocumentVector&, const DocumentVector&) = default;
};

/// Builds the vocabulary from training documents.
///
/// Frequency policy: keep terms with doc_freq >= min_doc_freq, order by
/// descending doc_freq then lexicographically, and truncate to max_terms.
/// Throws DataError for an empty document list or an empty result.
Vocabulary build_vocabulary(const std::vector<ProcessedDocument>& docs,
                            const VocabularyPolicy& policy);

/// Occurrences of `term` in the document.
std::size_t tf_raw(std::string_view term, const ProcessedDocument& doc);

/// 1 + ln(f) for f >= 1, and 0 for f = 0.
double tf_log(std::size_t f) noexcept;

/// 0.5 + 0.5 * f / max_f where max_f is the highest count of any term in the
/// document. Only meaningful for terms present in a non-empty document.
double tf_augmented(std::string_view term, const ProcessedDocument& doc);

/// ln(n_docs / doc_freq). Throws DataError when the term is not in the vocabulary.
double idf(std::string_view term, const Vocabulary& vocab);
double idf(std::size_t ordinal, const Vocabulary& vocab);

/// Weights every vocabulary term present in the document; terms outside the
/// vocabulary are ignored and zero weights are not stored.
DocumentVector vectorize(const ProcessedDocument& doc, const Vocabulary& vocab,
                         const WeightingScheme& scheme);

/// Scales the vector to unit Euclidean length (zero vectors are unchanged).
DocumentVector l2_normalize(DocumentVector v);

/// `term<TAB>doc_freq` per line, in vocabulary order, after a header line
/// carrying the format version and n_docs.
void save_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path);
Vocabulary load_vocabulary(const std::filesystem::path& path);

}  // namespace sentiment
