#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sentiment/polarity.hpp"

namespace sentiment {

struct Document {
    std::uint64_t id = 0;
    std::string text;
    std::optional<Polarity> label;

    friend bool operator==(const Document&, const Document&) = default;
};

/// Ordered documents, every one labeled.
struct LabeledCorpus {
    std::vector<Document> documents;

    std::size_t size() const noexcept { return documents.size(); }
    std::size_t count(Polarity p) const noexcept;

    friend bool operator==(const LabeledCorpus&, const LabeledCorpus&) = default;
};

struct SplitSpec {
    double test_fraction = 0.30;
    std::uint64_t seed = 42;
};

struct Split {
    LabeledCorpus train;
    LabeledCorpus test;
};

inline constexpr const char* kDefaultTextColumn = "text";
inline constexpr const char* kDefaultLabelColumn = "sentiment";

/// Reads a UTF-8 CSV with a header row. Ids are assigned 0,1,2,... in row
/// order. Throws DataError for a missing file, a missing column, a short
/// row, or a label that is not POS/NEG (case-insensitive).
LabeledCorpus load_csv(const std::filesystem::path& path,
                       const std::string& text_column = kDefaultTextColumn,
                       const std::string& label_column = kDefaultLabelColumn);

/// Writes the corpus with a two-column header (text, label). load_csv on
/// the result reproduces the corpus.
void write_csv(const LabeledCorpus& corpus, const std::filesystem::path& path,
               const std::string& text_column = kDefaultTextColumn,
               const std::string& label_column = kDefaultLabelColumn);

/// Deterministic stratified split.
///
/// Documents of each class are taken in ascending id order and shuffled
/// with a SplitMix64 seeded by spec.seed (POS list first, then NEG, one
/// shared generator). The first round(n_class * test_fraction) of each
/// shuffled list go to test. Both outputs keep ascending id order.
///
/// Throws UsageError when test_fraction is outside (0,1) and DataError when
/// a class has fewer than two documents.
Split stratified_split(const LabeledCorpus& corpus, const SplitSpec& spec);

}  // namespace sentiment
