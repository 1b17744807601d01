#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sentiment/classifier.hpp"
#include "sentiment/errors.hpp"
#include "sentiment/naive_bayes.hpp"
#include "test_util.hpp"

using namespace sentiment;
using testutil::vec;

namespace {

constexpr auto P = Polarity::Pos;
constexpr auto N = Polarity::Neg;

std::vector<DocumentVector> four_docs() {
    return {vec(P, {{0, 1}}), vec(P, {{0, 1}}), vec(N, {{1, 1}}), vec(N, {{1, 1}})};
}

}  // namespace

TEST(NaiveBayes, PriorsAndLikelihoods) {
    const auto m = nb_train(four_docs(), 2, 1.0);
    EXPECT_DOUBLE_EQ(m.class_log_prior[index_of(P)], std::log(0.5));
    EXPECT_DOUBLE_EQ(m.class_log_prior[index_of(N)], std::log(0.5));
    EXPECT_DOUBLE_EQ(std::exp(m.term_log_likelihood[index_of(P)][0]), 0.75);
    EXPECT_DOUBLE_EQ(std::exp(m.term_log_likelihood[index_of(P)][1]), 0.25);
    EXPECT_EQ(predict(ClassifierKind::NaiveBayes, nb_score(m, vec(P, {{0, 1}}))), P);
}

TEST(NaiveBayes, ScoreExamples) {
    const auto m = nb_train(four_docs(), 2, 1.0);
    EXPECT_DOUBLE_EQ(nb_score(m, DocumentVector{}), 0.0);
    // P(a|POS) / P(a|NEG) = 0.75 / 0.25 = 3.
    EXPECT_NEAR(nb_score(m, vec(P, {{0, 2.5}})), 2.5 * std::log(3.0), 1e-12);
    EXPECT_EQ(predict(ClassifierKind::NaiveBayes, nb_score(m, DocumentVector{})), N);

    const auto skewed = nb_train(std::vector<DocumentVector>{vec(P, {}), vec(N, {}), vec(N, {})}, 2, 1.0);
    EXPECT_NEAR(nb_score(skewed, DocumentVector{}), std::log(1.0 / 3) - std::log(2.0 / 3), 1e-12);
}

TEST(NaiveBayes, HeavySmoothingIsUniform) {
    const auto m = nb_train(four_docs(), 2, 1e12);
    for (auto c : {P, N}) {
        for (double ll : m.term_log_likelihood[index_of(c)]) EXPECT_NEAR(std::exp(ll), 0.5, 1e-9);
    }
}

TEST(NaiveBayes, Preconditions) {
    EXPECT_THROW(nb_train(std::vector<DocumentVector>{vec(P, {{0, 1}})}, 2, 1.0), DataError);
    EXPECT_THROW(nb_train(four_docs(), 2, 0.0), UsageError);
}

TEST(NaiveBayesProperties, NormalizationAndDuplication) {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t v = 1 + rng.below(8);
        std::vector<DocumentVector> docs;
        const auto n = 2 + rng.below(11);
        for (std::uint64_t d = 0; d < n; ++d) {
            DocumentVector x;
            x.label = d == 0 ? P : d == 1 ? N : (rng.below(2) ? P : N);
            for (std::size_t t = 0; t < v; ++t) {
                if (const auto w = rng.below(4)) x.entries.push_back({t, static_cast<double>(w) * 0.75});
            }
            docs.push_back(x);
        }
        const double alpha = 0.1 + static_cast<double>(rng.below(20)) / 10.0;
        const auto m = nb_train(docs, v, alpha);
        EXPECT_NEAR(std::exp(m.class_log_prior[0]) + std::exp(m.class_log_prior[1]), 1.0, 1e-9);
        for (auto c : {P, N}) {
            double sum = 0.0;
            for (double ll : m.term_log_likelihood[index_of(c)]) sum += std::exp(ll);
            EXPECT_NEAR(sum, 1.0, 1e-6);
        }
        for (std::size_t d = 0; d < docs.size(); ++d) {
            if (docs[d].label != P || predict(ClassifierKind::NaiveBayes, nb_score(m, docs[d])) != P) continue;
            auto more = docs;
            more.push_back(docs[d]);
            EXPECT_EQ(predict(ClassifierKind::NaiveBayes, nb_score(nb_train(more, v, alpha), docs[d])), P);
        }
    }
}

TEST(NaiveBayesProperties, MatchesExactBayesRule) {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t v = 1 + rng.below(8);
        const auto n = 2 + rng.below(11);
        std::vector<std::vector<unsigned>> counts;
        std::vector<Polarity> labels;
        std::vector<DocumentVector> docs;
        for (std::uint64_t d = 0; d < n; ++d) {
            labels.push_back(d == 0 ? P : d == 1 ? N : (rng.below(2) ? P : N));
            counts.emplace_back(v);
            DocumentVector x;
            x.label = labels.back();
            for (std::size_t t = 0; t < v; ++t) {
                counts.back()[t] = static_cast<unsigned>(rng.below(4));
                if (counts.back()[t]) x.entries.push_back({t, static_cast<double>(counts.back()[t])});
            }
            docs.push_back(x);
        }
        const auto m = nb_train(docs, v, 1.0);
        for (std::size_t d = 0; d < docs.size(); ++d) {
            EXPECT_EQ(predict(ClassifierKind::NaiveBayes, nb_score(m, docs[d])),
                      oracle::bayes_enumeration(counts, labels, 1, counts[d]))
                << "trial " << trial << " doc " << d;
        }
    }
}
