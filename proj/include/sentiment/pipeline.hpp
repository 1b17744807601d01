#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "sentiment/classifier.hpp"
#include "sentiment/config.hpp"
#include "sentiment/evaluation.hpp"
#include "sentiment/stage_io.hpp"
#include "sentiment/vectorspace.hpp"

namespace sentiment {

/// File names inside a report directory.
namespace artifact {
inline constexpr const char* kTerms = "prep.terms";
inline constexpr const char* kVocab = "vocab.tsv";
inline constexpr const char* kReport = "report.json";
inline constexpr const char* kSummary = "summary.txt";
std::string model(ClassifierKind k);
std::string scores(ClassifierKind k);
std::string roc(ClassifierKind k, Polarity positive_class);
std::string confusion(ClassifierKind k);
}  // namespace artifact

struct StageTiming {
    std::string stage;
    double milliseconds = 0.0;
};

/// Load, split and preprocess the input corpus.
PreparedCorpus prepare_corpus(const PipelineConfig& config);

/// Vocabulary over the training split.
Vocabulary build_training_vocabulary(const PreparedCorpus& corpus, const PipelineConfig& config);

std::vector<DocumentVector> vectorize_all(const std::vector<ProcessedDocument>& docs,
                                          const Vocabulary& vocab, const WeightingScheme& scheme);

TrainedModel train_classifier(ClassifierKind kind, const PreparedCorpus& corpus,
                              const Vocabulary& vocab, const PipelineConfig& config);

/// Scores every document of both splits, in ascending id order.
ScoreTable score_corpus(const TrainedModel& model, const PreparedCorpus& corpus,
                        const Vocabulary& vocab);

/// Test-split evaluation of one classifier, once with each class as positive.
/// The NEG curve ranks by negated score.
struct ClassifierEvaluation {
    ClassifierKind kind = ClassifierKind::NaiveBayes;
    std::size_t test_size = 0;
    std::array<ConfusionMatrix, 2> confusion{};  // indexed by index_of(positive class)
    std::array<MetricsRow, 2> metrics{};
    std::array<RocCurve, 2> roc{};
};

ClassifierEvaluation evaluate_scores(const ScoreTable& table);

/// Writes roc_<kind>_POS.csv, roc_<kind>_NEG.csv and confusion_<kind>.csv.
void write_evaluation_files(const ClassifierEvaluation& eval, const std::filesystem::path& dir);

/// Metrics of one confusion matrix as a JSON object, 6 significant digits.
std::string metrics_json(const ConfusionMatrix& cm);

/// Rebuilds the evaluation side files, summary.txt and report.json from the
/// stage outputs already in `dir`, and returns the report text. Reads the
/// terms, vocabulary and per-classifier score files named by `config`.
std::string write_report(const PipelineConfig& config, const std::filesystem::path& dir,
                         std::span<const StageTiming> timings = {});

struct RunResult {
    std::filesystem::path report_dir;
    std::string report_json;
    std::vector<StageTiming> timings;
};

/// prep -> vocab -> train/score per classifier -> evaluate -> report, all
/// into config.report_dir. Stage failures are rethrown with the stage name
/// prefixed; files this run created are removed first.
RunResult run_pipeline(const PipelineConfig& config);

}  // namespace sentiment
