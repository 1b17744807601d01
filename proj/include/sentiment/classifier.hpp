#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "sentiment/decision_tree.hpp"
#include "sentiment/linear_svm.hpp"
#include "sentiment/naive_bayes.hpp"

namespace sentiment {

enum class ClassifierKind { NaiveBayes, DecisionTree, LinearSvm };

inline constexpr std::array<ClassifierKind, 3> kAllClassifiers = {
    ClassifierKind::NaiveBayes, ClassifierKind::DecisionTree, ClassifierKind::LinearSvm};

/// "nb", "dt" or "svm".
std::string_view to_string(ClassifierKind k) noexcept;
std::optional<ClassifierKind> parse_classifier_kind(std::string_view s) noexcept;

struct TrainConfig {
    double nb_alpha = 1.0;
    std::size_t dt_max_depth = 10;
    std::size_t dt_min_leaf = 2;
    double svm_c = 1.0;
    std::size_t svm_epochs = 20;
    bool svm_l2_normalize = false;
    std::uint64_t seed = 42;
};

/// How raw documents become model inputs; stored with each model so that
/// a dumped model can score new documents on its own.
struct FeatureSettings {
    WeightingScheme weighting;
    bool l2_normalize = false;

    friend bool operator==(const FeatureSettings&, const FeatureSettings&) = default;
};

struct TrainedModel {
    FeatureSettings features;
    std::variant<NaiveBayesModel, DecisionTreeModel, LinearSvmModel> model;

    ClassifierKind kind() const noexcept;

    friend bool operator==(const TrainedModel&, const TrainedModel&) = default;
};

/// Trains one classifier on vectors that were built with `weighting`. The SVM
/// applies L2 normalisation first when config.svm_l2_normalize is set.
TrainedModel train(ClassifierKind kind, std::span<const DocumentVector> vectors,
                   std::size_t vocab_size, const WeightingScheme& weighting,
                   const TrainConfig& config);

/// Real-valued score oriented towards POS. Applies the model's own
/// normalisation to x.
double score(const TrainedModel& model, const DocumentVector& x);

/// Scores above this value are POS; ties and anything below are NEG.
double decision_threshold(ClassifierKind kind) noexcept;

Polarity predict(ClassifierKind kind, double score) noexcept;

/// Self-describing text dump: header line, kind and feature settings, then
/// the parameters. Doubles are written in shortest round-trip form so a
/// reloaded model scores bit-identically.
void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

}  // namespace sentiment
