#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "sentiment/classifier.hpp"
#include "sentiment/preprocess.hpp"

namespace sentiment {

enum class SplitRole { Train, Test };

std::string_view to_string(SplitRole r) noexcept;

/// Preprocessed documents of both splits, each in ascending id order.
struct PreparedCorpus {
    std::vector<ProcessedDocument> train;
    std::vector<ProcessedDocument> test;

    friend bool operator==(const PreparedCorpus&, const PreparedCorpus&) = default;
};

/// `#sentiment-terms v1` header, then one `id<TAB>label<TAB>split<TAB>terms`
/// line per document in ascending id order, terms joined by single spaces.
void write_terms(const PreparedCorpus& corpus, const std::filesystem::path& path);
PreparedCorpus read_terms(const std::filesystem::path& path);

struct ScoreRow {
    std::uint64_t id = 0;
    Polarity label = Polarity::Neg;
    SplitRole split = SplitRole::Test;
    double score = 0.0;
    Polarity prediction = Polarity::Neg;

    friend bool operator==(const ScoreRow&, const ScoreRow&) = default;
};

struct ScoreTable {
    ClassifierKind kind = ClassifierKind::NaiveBayes;
    std::vector<ScoreRow> rows;

    friend bool operator==(const ScoreTable&, const ScoreTable&) = default;
};

/// `#sentiment-scores v1 classifier=<kind>` header, then CSV with columns
/// id,label,split,score,prediction. Scores use shortest round-trip form.
void write_scores(const ScoreTable& table, const std::filesystem::path& path);
ScoreTable read_scores(const std::filesystem::path& path);

}  // namespace sentiment
