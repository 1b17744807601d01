#pragma once

#include <array>
#include <span>
#include <vector>

#include "sentiment/vectorspace.hpp"

namespace sentiment {

/// Multinomial naive Bayes over real-valued term weights (fractional counts).
struct NaiveBayesModel {
    /// Indexed by index_of(Polarity).
    std::array<double, 2> class_log_prior{};
    /// term_log_likelihood[class][ordinal]; dense over the vocabulary since
    /// smoothing gives every term a likelihood.
    std::array<std::vector<double>, 2> term_log_likelihood;
    double smoothing_alpha = 1.0;
    std::size_t vocab_size = 0;

    friend bool operator==(const NaiveBayesModel&, const NaiveBayesModel&) = default;
};

/// log P(c) = ln(n_c / n); log P(t|c) = ln((W(c,t) + alpha) / (W(c) + alpha |V|)),
/// where W sums vector weights over class-c training vectors.
/// Throws DataError unless both classes are present, UsageError unless alpha > 0.
NaiveBayesModel nb_train(std::span<const DocumentVector> vectors, std::size_t vocab_size,
                         double alpha = 1.0);

/// Posterior log-odds log P(POS|x) - log P(NEG|x).
double nb_score(const NaiveBayesModel& model, const DocumentVector& x);

}  // namespace sentiment
