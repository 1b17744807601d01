#include "sentiment/decision_tree.hpp"

#include <algorithm>
#include <tuple>

#include "sentiment/errors.hpp"

namespace sentiment {

namespace {

__extension__ typedef unsigned __int128 u128;

using Counts = std::array<std::size_t, 2>;

std::size_t total(const Counts& c) { return c[0] + c[1]; }

// Split quality as the fraction (numer / denom) of
//   (l0^2 + l1^2) / nl + (r0^2 + r1^2) / nr,
// which is n minus n * weighted Gini; larger is better.
struct Purity {
    u128 numer = 0;
    u128 denom = 1;

    static Purity of(const Counts& left, const Counts& right) {
        const u128 nl = total(left);
        const u128 nr = total(right);
        const u128 sl = u128(left[0]) * left[0] + u128(left[1]) * left[1];
        const u128 sr = u128(right[0]) * right[0] + u128(right[1]) * right[1];
        return {sl * nr + sr * nl, nl * nr};
    }

    bool better_than(const Purity& o) const { return numer * o.denom > o.numer * denom; }
};

struct Candidate {
    std::size_t feature = 0;
    double threshold = 0.0;
    Purity purity;
};

class Builder {
public:
    Builder(std::span<const DocumentVector> vectors, const TreeParams& params,
            DecisionTreeModel& model)
        : vectors_(vectors), params_(params), model_(model) {}

    std::size_t build(std::vector<std::size_t> samples, std::size_t depth) {
        Counts counts{};
        for (auto i : samples) ++counts[label(i)];

        const std::size_t id = model_.nodes.size();
        model_.nodes.emplace_back(DecisionTreeModel::Leaf{counts});

        const bool pure = counts[0] == 0 || counts[1] == 0;
        if (pure || depth >= params_.max_depth || samples.size() < 2 * params_.min_leaf) return id;

        const auto best = best_split(samples, counts);
        if (!best) return id;

        std::vector<std::size_t> left;
        std::vector<std::size_t> right;
        for (auto i : samples) {
            (vectors_[i].weight_at(best->feature) <= best->threshold ? left : right).push_back(i);
        }
        samples.clear();
        samples.shrink_to_fit();
        const std::size_t l = build(std::move(left), depth + 1);
        const std::size_t r = build(std::move(right), depth + 1);
        model_.nodes[id] = DecisionTreeModel::Split{best->feature, best->threshold, l, r};
        return id;
    }

private:
    std::span<const DocumentVector> vectors_;
    TreeParams params_;
    DecisionTreeModel& model_;

    std::size_t label(std::size_t i) const { return index_of(*vectors_[i].label); }

    std::optional<Candidate> best_split(const std::vector<std::size_t>& samples,
                                        const Counts& node_counts) const {
        // (feature, value, class) for every stored entry of the node's samples;
        // samples without an entry hold an implicit 0.
        std::vector<std::tuple<std::size_t, double, std::size_t>> cells;
        for (auto i : samples) {
            for (const auto& e : vectors_[i].entries) cells.emplace_back(e.index, e.weight, label(i));
        }
        std::sort(cells.begin(), cells.end());

        std::optional<Candidate> best;
        std::vector<std::pair<double, Counts>> groups;
        for (std::size_t lo = 0; lo < cells.size();) {
            const std::size_t feature = std::get<0>(cells[lo]);
            std::size_t hi = lo;
            Counts nonzero{};
            groups.clear();
            for (; hi < cells.size() && std::get<0>(cells[hi]) == feature; ++hi) {
                const auto& [f, value, cls] = cells[hi];
                if (groups.empty() || groups.back().first != value) groups.push_back({value, {}});
                ++groups.back().second[cls];
                ++nonzero[cls];
            }
            const Counts zeros{node_counts[0] - nonzero[0], node_counts[1] - nonzero[1]};
            if (total(zeros) > 0) {
                const auto at = std::lower_bound(
                    groups.begin(), groups.end(), 0.0,
                    [](const auto& g, double v) { return g.first < v; });
                if (at != groups.end() && at->first == 0.0) {
                    at->second[0] += zeros[0];
                    at->second[1] += zeros[1];
                } else {
                    groups.insert(at, {0.0, zeros});
                }
            }
            scan_feature(feature, groups, node_counts, best);
            lo = hi;
        }
        return best;
    }

    void scan_feature(std::size_t feature, const std::vector<std::pair<double, Counts>>& groups,
                      const Counts& node_counts, std::optional<Candidate>& best) const {
        Counts left{};
        for (std::size_t g = 0; g + 1 < groups.size(); ++g) {
            left[0] += groups[g].second[0];
            left[1] += groups[g].second[1];
            const Counts right{node_counts[0] - left[0], node_counts[1] - left[1]};
            if (total(left) < params_.min_leaf || total(right) < params_.min_leaf) continue;
            const Purity p = Purity::of(left, right);
            if (!best || p.better_than(best->purity)) {
                best = Candidate{feature, 0.5 * (groups[g].first + groups[g + 1].first), p};
            }
        }
    }
};

}  // namespace

std::size_t DecisionTreeModel::depth() const {
    if (nodes.empty()) return 0;
    std::size_t deepest = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        const auto [id, d] = stack.back();
        stack.pop_back();
        deepest = std::max(deepest, d);
        if (const auto* s = std::get_if<Split>(&nodes.at(id))) {
            stack.emplace_back(s->left, d + 1);
            stack.emplace_back(s->right, d + 1);
        }
    }
    return deepest;
}

DecisionTreeModel dt_train(std::span<const DocumentVector> vectors, std::size_t vocab_size,
                           const TreeParams& params) {
    if (params.min_leaf < 1) throw UsageError("decision tree min_leaf must be at least 1");
    std::array<std::size_t, 2> seen{};
    for (const auto& v : vectors) {
        if (!v.label) throw DataError("training vector " + std::to_string(v.doc_id) + " has no label");
        for (const auto& e : v.entries) {
            if (e.index >= vocab_size) throw DataError("vector ordinal outside vocabulary");
        }
        ++seen[index_of(*v.label)];
    }
    if (seen[0] == 0 || seen[1] == 0) {
        throw DataError("decision tree training needs both POS and NEG documents");
    }

    DecisionTreeModel model;
    model.max_depth = params.max_depth;
    model.min_leaf = params.min_leaf;
    std::vector<std::size_t> all(vectors.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    model.root = Builder(vectors, params, model).build(std::move(all), 0);
    return model;
}

double dt_score(const DecisionTreeModel& model, const DocumentVector& x) {
    std::size_t id = model.root;
    for (;;) {
        const auto& node = model.nodes.at(id);
        if (const auto* leaf = std::get_if<DecisionTreeModel::Leaf>(&node)) {
            const auto n = leaf->counts[0] + leaf->counts[1];
            if (n == 0) return 0.0;
            return static_cast<double>(leaf->counts[index_of(Polarity::Pos)]) /
                   static_cast<double>(n);
        }
        const auto& split = std::get<DecisionTreeModel::Split>(node);
        id = x.weight_at(split.feature) <= split.threshold ? split.left : split.right;
    }
}

}  // namespace sentiment
