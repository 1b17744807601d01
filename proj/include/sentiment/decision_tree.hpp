#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "sentiment/vectorspace.hpp"

namespace sentiment {

struct DecisionTreeModel {
    /// Samples with x[feature] <= threshold go left, the rest go right.
    struct Split {
        std::size_t feature;
        double threshold;
        std::size_t left;
        std::size_t right;

        friend bool operator==(const Split&, const Split&) = default;
    };
    /// Training class counts at the leaf, indexed by index_of(Polarity).
    struct Leaf {
        std::array<std::size_t, 2> counts{};

        friend bool operator==(const Leaf&, const Leaf&) = default;
    };
    using Node = std::variant<Split, Leaf>;

    std::vector<Node> nodes;
    std::size_t root = 0;
    std::size_t max_depth = 10;
    std::size_t min_leaf = 2;

    std::size_t depth() const;

    friend bool operator==(const DecisionTreeModel&, const DecisionTreeModel&) = default;
};

struct TreeParams {
    std::size_t max_depth = 10;
    std::size_t min_leaf = 2;
};

/// CART with Gini impurity.
///
/// At each node every (feature, threshold) pair is scored by the weighted
/// Gini impurity of its children, where thresholds are midpoints between
/// consecutive distinct values of the feature at that node and both children
/// must hold at least min_leaf samples. The lowest impurity wins; ties go to
/// the lower feature ordinal, then the lower threshold. A node becomes a leaf
/// when it is pure, sits at max_depth, or admits no valid split.
DecisionTreeModel dt_train(std::span<const DocumentVector> vectors, std::size_t vocab_size,
                           const TreeParams& params);

/// Fraction of POS training samples in the leaf reached by x.
double dt_score(const DecisionTreeModel& model, const DocumentVector& x);

}  // namespace sentiment
