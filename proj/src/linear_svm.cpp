#include "sentiment/linear_svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sentiment/errors.hpp"
#include "sentiment/rng.hpp"

namespace sentiment {

namespace {

double sign_of(const DocumentVector& v) { return *v.label == Polarity::Pos ? 1.0 : -1.0; }

double dot(std::span<const double> w, const DocumentVector& x) {
    double s = 0.0;
    for (const auto& e : x.entries) s += w[e.index] * e.weight;
    return s;
}

// Moves `bias` to the nearest point of the interval minimising the mean
// hinge loss for fixed weights. The loss is piecewise linear in b with a
// kink at y_i - s_i for every sample; with P positives, sorting the kinks
// puts the minimising interval between the P-th and (P+1)-th of them.
double refit_bias(std::span<const DocumentVector> vectors, std::span<const double> w, double bias) {
    std::vector<double> kinks;
    kinks.reserve(vectors.size());
    std::size_t positives = 0;
    for (const auto& v : vectors) {
        const double y = sign_of(v);
        if (y > 0) ++positives;
        kinks.push_back(y - dot(w, v));
    }
    if (positives == 0 || positives == vectors.size()) return bias;
    std::sort(kinks.begin(), kinks.end());
    return std::clamp(bias, kinks[positives - 1], kinks[positives]);
}

}  // namespace

double svm_objective(std::span<const DocumentVector> vectors, std::span<const double> weights,
                     double bias, double c) {
    if (vectors.empty()) return 0.0;
    const double n = static_cast<double>(vectors.size());
    const double lambda = 1.0 / (c * n);
    const double sq = std::inner_product(weights.begin(), weights.end(), weights.begin(), 0.0);
    double hinge = 0.0;
    for (const auto& v : vectors) hinge += std::max(0.0, 1.0 - sign_of(v) * (dot(weights, v) + bias));
    return 0.5 * lambda * sq + hinge / n;
}

LinearSvmModel svm_train(std::span<const DocumentVector> vectors, std::size_t vocab_size,
                         const SvmParams& params) {
    if (!(params.c > 0.0)) throw UsageError("SVM regularization C must be positive");
    if (params.epochs == 0) throw UsageError("SVM epochs must be positive");
    std::array<std::size_t, 2> seen{};
    for (const auto& v : vectors) {
        if (!v.label) throw DataError("training vector " + std::to_string(v.doc_id) + " has no label");
        for (const auto& e : v.entries) {
            if (e.index >= vocab_size) throw DataError("vector ordinal outside vocabulary");
        }
        ++seen[index_of(*v.label)];
    }
    if (seen[0] == 0 || seen[1] == 0) throw DataError("SVM training needs both POS and NEG documents");

    const std::size_t n = vectors.size();
    const double lambda = 1.0 / (params.c * static_cast<double>(n));

    std::vector<double> w(vocab_size, 0.0);
    double b = 0.0;
    std::vector<double> w_sum(vocab_size);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    SplitMix64 rng(params.seed);

    LinearSvmModel model;
    model.regularization_c = params.c;
    std::uint64_t t = 0;
    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
        shuffle(std::span<std::size_t>(order), rng);
        std::fill(w_sum.begin(), w_sum.end(), 0.0);
        double b_sum = 0.0;
        for (std::size_t i : order) {
            ++t;
            const DocumentVector& x = vectors[i];
            const double y = sign_of(x);
            const double eta = 1.0 / (lambda * static_cast<double>(t));
            const bool violated = y * (dot(w, x) + b) < 1.0;
            const double shrink = 1.0 - 1.0 / static_cast<double>(t);
            for (auto& wj : w) wj *= shrink;
            b *= shrink;
            if (violated) {
                for (const auto& e : x.entries) w[e.index] += eta * y * e.weight;
                b += eta * y;
            }
            for (std::size_t j = 0; j < vocab_size; ++j) w_sum[j] += w[j];
            b_sum += b;
        }
        const double inv = 1.0 / static_cast<double>(n);
        std::vector<double> w_avg(vocab_size);
        for (std::size_t j = 0; j < vocab_size; ++j) w_avg[j] = w_sum[j] * inv;
        const double b_avg = refit_bias(vectors, w_avg, b_sum * inv);
        model.epoch_objectives.push_back(svm_objective(vectors, w_avg, b_avg, params.c));
        if (epoch + 1 == params.epochs) {
            model.weights = std::move(w_avg);
            model.bias = b_avg;
        }
    }
    model.epochs_run = params.epochs;
    return model;
}

double svm_score(const LinearSvmModel& model, const DocumentVector& x) {
    double s = model.bias;
    for (const auto& e : x.entries) {
        if (e.index >= model.weights.size()) throw DataError("vector ordinal outside model vocabulary");
        s += model.weights[e.index] * e.weight;
    }
    return s;
}

}  // namespace sentiment
