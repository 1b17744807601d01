#include "sentiment/classifier.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace sentiment {

std::string_view to_string(ClassifierKind k) noexcept {
    switch (k) {
    case ClassifierKind::NaiveBayes: return "nb";
    case ClassifierKind::DecisionTree: return "dt";
    case ClassifierKind::LinearSvm: return "svm";
    }
    return "nb";
}

std::optional<ClassifierKind> parse_classifier_kind(std::string_view s) noexcept {
    std::string low(s);
    for (auto& c : low) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (auto k : kAllClassifiers) {
        if (low == to_string(k)) return k;
    }
    return std::nullopt;
}

ClassifierKind TrainedModel::kind() const noexcept {
    return static_cast<ClassifierKind>(model.index());
}

TrainedModel train(ClassifierKind kind, std::span<const DocumentVector> vectors,
                   std::size_t vocab_size, const WeightingScheme& weighting,
                   const TrainConfig& config) {
    TrainedModel out;
    out.features.weighting = weighting;
    switch (kind) {
    case ClassifierKind::NaiveBayes:
        out.model = nb_train(vectors, vocab_size, config.nb_alpha);
        break;
    case ClassifierKind::DecisionTree:
        out.model = dt_train(vectors, vocab_size, {config.dt_max_depth, config.dt_min_leaf});
        break;
    case ClassifierKind::LinearSvm: {
        out.features.l2_normalize = config.svm_l2_normalize;
        const SvmParams params{config.svm_c, config.svm_epochs, config.seed};
        if (config.svm_l2_normalize) {
            std::vector<DocumentVector> normalized;
            normalized.reserve(vectors.size());
            for (const auto& v : vectors) normalized.push_back(l2_normalize(v));
            out.model = svm_train(normalized, vocab_size, params);
        } else {
            out.model = svm_train(vectors, vocab_size, params);
        }
        break;
    }
    }
    return out;
}

double score(const TrainedModel& model, const DocumentVector& x) {
    const auto raw = [](const auto& m, const DocumentVector& v) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, NaiveBayesModel>) {
            return nb_score(m, v);
        } else if constexpr (std::is_same_v<M, DecisionTreeModel>) {
            return dt_score(m, v);
        } else {
            return svm_score(m, v);
        }
    };
    if (model.features.l2_normalize) {
        const auto normalized = l2_normalize(x);
        return std::visit([&](const auto& m) { return raw(m, normalized); }, model.model);
    }
    return std::visit([&](const auto& m) { return raw(m, x); }, model.model);
}

double decision_threshold(ClassifierKind kind) noexcept {
    return kind == ClassifierKind::DecisionTree ? 0.5 : 0.0;
}

Polarity predict(ClassifierKind kind, double score) noexcept {
    return score > decision_threshold(kind) ? Polarity::Pos : Polarity::Neg;
}

}  // namespace sentiment
