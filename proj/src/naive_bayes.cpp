#include "sentiment/naive_bayes.hpp"

#include <cmath>

#include "sentiment/errors.hpp"

namespace sentiment {

NaiveBayesModel nb_train(std::span<const DocumentVector> vectors, std::size_t vocab_size,
                         double alpha) {
    if (!(alpha > 0.0)) throw UsageError("naive Bayes smoothing alpha must be positive");
    if (vocab_size == 0) throw DataError("naive Bayes needs a non-empty vocabulary");

    std::array<std::size_t, 2> docs{};
    std::array<std::vector<double>, 2> term_weight{std::vector<double>(vocab_size, 0.0),
                                                   std::vector<double>(vocab_size, 0.0)};
    std::array<double, 2> class_weight{};
    for (const auto& v : vectors) {
        if (!v.label) throw DataError("training vector " + std::to_string(v.doc_id) + " has no label");
        const auto c = index_of(*v.label);
        ++docs[c];
        for (const auto& e : v.entries) {
            if (e.index >= vocab_size) throw DataError("vector ordinal outside vocabulary");
            term_weight[c][e.index] += e.weight;
            class_weight[c] += e.weight;
        }
    }
    if (docs[0] == 0 || docs[1] == 0) {
        throw DataError("naive Bayes training needs both POS and NEG documents");
    }

    NaiveBayesModel m;
    m.smoothing_alpha = alpha;
    m.vocab_size = vocab_size;
    const double n = static_cast<double>(docs[0] + docs[1]);
    for (std::size_t c = 0; c < 2; ++c) {
        m.class_log_prior[c] = std::log(static_cast<double>(docs[c]) / n);
        const double denom = class_weight[c] + alpha * static_cast<double>(vocab_size);
        auto& ll = m.term_log_likelihood[c];
        ll.resize(vocab_size);
        for (std::size_t t = 0; t < vocab_size; ++t) {
            ll[t] = std::log((term_weight[c][t] + alpha) / denom);
        }
    }
    return m;
}

double nb_score(const NaiveBayesModel& model, const DocumentVector& x) {
    const auto pos = index_of(Polarity::Pos);
    const auto neg = index_of(Polarity::Neg);
    double joint_pos = model.class_log_prior[pos];
    double joint_neg = model.class_log_prior[neg];
    for (const auto& e : x.entries) {
        if (e.index >= model.vocab_size) throw DataError("vector ordinal outside model vocabulary");
        joint_pos += e.weight * model.term_log_likelihood[pos][e.index];
        joint_neg += e.weight * model.term_log_likelihood[neg][e.index];
    }
    return joint_pos - joint_neg;
}

}  // namespace sentiment
