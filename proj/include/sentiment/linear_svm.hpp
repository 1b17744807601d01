#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sentiment/vectorspace.hpp"

namespace sentiment {

struct LinearSvmModel {
    std::vector<double> weights;
    double bias = 0.0;
    double regularization_c = 1.0;
    std::size_t epochs_run = 0;
    /// Primal objective of each epoch's averaged iterate, in epoch order.
    std::vector<double> epoch_objectives;

    friend bool operator==(const LinearSvmModel&, const LinearSvmModel&) = default;
};

struct SvmParams {
    double c = 1.0;
    std::size_t epochs = 20;
    std::uint64_t seed = 42;
};

/// Primal objective (lambda/2)|w|^2 + (1/n) sum max(0, 1 - y (w.x + b)) with
/// lambda = 1/(C n) and y = +1 for POS, -1 for NEG. The bias is not regularized.
double svm_objective(std::span<const DocumentVector> vectors, std::span<const double> weights,
                     double bias, double c);

/// Pegasos stochastic subgradient descent with step 1/(lambda t).
///
/// Each epoch visits the samples in a fresh SplitMix64 shuffle. The bias is
/// trained as an extra coordinate alongside w. The returned model is the
/// average of the final epoch's iterates, with its bias then moved to the
/// nearest value minimising the objective for those weights.
LinearSvmModel svm_train(std::span<const DocumentVector> vectors, std::size_t vocab_size,
                         const SvmParams& params);

/// w.x + b
double svm_score(const LinearSvmModel& model, const DocumentVector& x);

}  // namespace sentiment
