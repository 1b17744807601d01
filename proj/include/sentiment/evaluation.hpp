#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sentiment/polarity.hpp"

namespace sentiment {

struct ConfusionMatrix {
    Polarity positive_class = Polarity::Pos;
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;

    std::size_t total() const noexcept { return tp + fp + tn + fn; }

    /// Same counts viewed from the other class: (tp,fp,tn,fn) -> (tn,fn,tp,fp).
    ConfusionMatrix swapped() const noexcept {
        return {opposite(positive_class), tn, fn, tp, fp};
    }

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

struct MetricsRow {
    double recall = 0.0;
    double precision = 0.0;
    double sensitivity = 0.0;
    double specificity = 0.0;
    double f_measure = 0.0;
    double accuracy = 0.0;
    /// tp + fp was zero, so precision was set to 0 by convention.
    bool degenerate_precision = false;
};

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;

    friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

struct RocCurve {
    Polarity positive_class = Polarity::Pos;
    std::vector<RocPoint> points;
    double auc = 0.0;
};

/// Throws DataError on empty input or a length mismatch.
ConfusionMatrix confusion(std::span<const Polarity> predictions, std::span<const Polarity> truths,
                          Polarity positive_class);

/// Throws DataError if either truth class is absent (tp+fn == 0 or tn+fp == 0).
MetricsRow metrics(const ConfusionMatrix& cm);

/// One point per distinct score, sweeping thresholds from the highest score
/// down and predicting positive when score >= threshold; starts at (0,0)
/// and ends at (1,1). `scores` must be oriented so that larger means more
/// likely `positive_class`. Throws DataError for empty or single-class input.
RocCurve roc_curve(std::span<const double> scores, std::span<const Polarity> truths,
                   Polarity positive_class);

/// Trapezoidal area under the curve's points.
double auc(const RocCurve& curve);

/// One classifier evaluated on one dataset.
struct SummaryEntry {
    std::string dataset;
    std::string classifier;
    double accuracy = 0.0;
    std::optional<double> auc;
};

/// Accuracy and AUC per classifier per dataset, never merged into one column.
struct SummaryTable {
    std::vector<std::string> datasets;     // row order: first appearance
    std::vector<std::string> classifiers;  // column order: first appearance
    /// cells[row][col]; empty when that pair was not evaluated.
    std::vector<std::vector<std::optional<SummaryEntry>>> cells;
};

/// Throws DataError when `entries` is empty.
SummaryTable summary_table(std::span<const SummaryEntry> entries);

/// Aligned plain-text table: accuracy as a percentage with 2 decimals, AUC
/// with 4 decimals, one labeled column each per classifier.
std::string render_summary(const SummaryTable& table);

/// "IMDB Data: 94.00, 73.20, 85.50": the accuracy percentages of one row.
std::string accuracy_line(const SummaryTable& table, std::size_t row);

void write_roc_csv(const RocCurve& curve, std::ostream& out);
void write_confusion_csv(std::span<const ConfusionMatrix> matrices, std::ostream& out);

}  // namespace sentiment
