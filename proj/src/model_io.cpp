#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sentiment/classifier.hpp"
#include "sentiment/errors.hpp"

namespace sentiment {

namespace {

constexpr std::string_view kModelHeader = "#sentiment-model v1";

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_doubles(std::ostream& out, std::string_view key, const std::vector<double>& values) {
    out << key << ' ' << values.size();
    for (double v : values) out << ' ' << fmt(v);
    out << '\n';
}

// Key/value lines: the first whitespace-separated word is the key, the
// rest of the line its value. Later duplicates are rejected.
class Fields {
public:
    Fields(std::istream& in, const std::filesystem::path& path) : path_(path) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line.front() == '#') continue;
            const auto sp = line.find(' ');
            std::string key = line.substr(0, sp);
            std::string value = sp == std::string::npos ? "" : line.substr(sp + 1);
            if (key == "node") {
                nodes_.push_back(std::move(value));
            } else if (!values_.emplace(key, std::move(value)).second) {
                fail("duplicate key '" + key + "'");
            }
        }
    }

    const std::string& text(const std::string& key) const {
        const auto it = values_.find(key);
        if (it == values_.end()) fail("missing key '" + key + "'");
        return it->second;
    }

    template <typename T>
    T number(const std::string& key) const {
        return parse<T>(text(key), key);
    }

    std::vector<double> doubles(const std::string& key) const {
        std::istringstream in(text(key));
        std::size_t n = 0;
        in >> n;
        std::vector<double> out;
        out.reserve(n);
        std::string tok;
        while (in >> tok) out.push_back(parse<double>(tok, key));
        if (out.size() != n) fail("key '" + key + "' declares " + std::to_string(n) + " values");
        return out;
    }

    const std::vector<std::string>& nodes() const { return nodes_; }

    template <typename T>
    T parse(std::string_view s, const std::string& what) const {
        T v{};
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
            fail("bad number '" + std::string(s) + "' for '" + what + "'");
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw DataError(path_.string() + ": " + msg);
    }

private:
    std::filesystem::path path_;
    std::map<std::string, std::string> values_;
    std::vector<std::string> nodes_;
};

}  // namespace

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << kModelHeader << '\n';
    out << "kind " << to_string(model.kind()) << '\n';
    out << "tf " << to_string(model.features.weighting.tf) << '\n';
    out << "idf " << (model.features.weighting.use_idf ? 1 : 0) << '\n';
    out << "l2_normalize " << (model.features.l2_normalize ? 1 : 0) << '\n';

    std::visit(
        [&out](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, NaiveBayesModel>) {
                out << "alpha " << fmt(m.smoothing_alpha) << '\n';
                out << "vocab_size " << m.vocab_size << '\n';
                out << "log_prior_pos " << fmt(m.class_log_prior[index_of(Polarity::Pos)]) << '\n';
                out << "log_prior_neg " << fmt(m.class_log_prior[index_of(Polarity::Neg)]) << '\n';
                write_doubles(out, "loglik_pos", m.term_log_likelihood[index_of(Polarity::Pos)]);
                write_doubles(out, "loglik_neg", m.term_log_likelihood[index_of(Polarity::Neg)]);
            } else if constexpr (std::is_same_v<M, DecisionTreeModel>) {
                out << "max_depth " << m.max_depth << '\n';
                out << "min_leaf " << m.min_leaf << '\n';
                out << "root " << m.root << '\n';
                out << "node_count " << m.nodes.size() << '\n';
                for (const auto& node : m.nodes) {
                    if (const auto* s = std::get_if<DecisionTreeModel::Split>(&node)) {
                        out << "node split " << s->feature << ' ' << fmt(s->threshold) << ' '
                            << s->left << ' ' << s->right << '\n';
                    } else {
                        const auto& leaf = std::get<DecisionTreeModel::Leaf>(node);
                        out << "node leaf " << leaf.counts[index_of(Polarity::Pos)] << ' '
                            << leaf.counts[index_of(Polarity::Neg)] << '\n';
                    }
                }
            } else {
                out << "c " << fmt(m.regularization_c) << '\n';
                out << "epochs " << m.epochs_run << '\n';
                out << "bias " << fmt(m.bias) << '\n';
                write_doubles(out, "weights", m.weights);
                write_doubles(out, "epoch_objectives", m.epoch_objectives);
            }
        },
        model.model);
    if (!out) throw DataError("failed writing " + path.string());
}

TrainedModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open model file " + path.string());
    std::string header;
    std::getline(in, header);
    if (header != kModelHeader) {
        throw DataError(path.string() + ": not a model file (expected header '" +
                        std::string(kModelHeader) + "')");
    }
    const Fields f(in, path);

    TrainedModel out;
    const auto tf = parse_tf_variant(f.text("tf"));
    if (!tf) f.fail("unknown tf variant '" + f.text("tf") + "'");
    out.features.weighting.tf = *tf;
    out.features.weighting.use_idf = f.number<int>("idf") != 0;
    out.features.l2_normalize = f.number<int>("l2_normalize") != 0;

    const auto kind = parse_classifier_kind(f.text("kind"));
    if (!kind) f.fail("unknown model kind '" + f.text("kind") + "'");
    switch (*kind) {
    case ClassifierKind::NaiveBayes: {
        NaiveBayesModel m;
        m.smoothing_alpha = f.number<double>("alpha");
        m.vocab_size = f.number<std::size_t>("vocab_size");
        m.class_log_prior[index_of(Polarity::Pos)] = f.number<double>("log_prior_pos");
        m.class_log_prior[index_of(Polarity::Neg)] = f.number<double>("log_prior_neg");
        m.term_log_likelihood[index_of(Polarity::Pos)] = f.doubles("loglik_pos");
        m.term_log_likelihood[index_of(Polarity::Neg)] = f.doubles("loglik_neg");
        for (const auto& ll : m.term_log_likelihood) {
            if (ll.size() != m.vocab_size) f.fail("likelihood table does not match vocab_size");
        }
        out.model = std::move(m);
        break;
    }
    case ClassifierKind::DecisionTree: {
        DecisionTreeModel m;
        m.max_depth = f.number<std::size_t>("max_depth");
        m.min_leaf = f.number<std::size_t>("min_leaf");
        m.root = f.number<std::size_t>("root");
        const auto count = f.number<std::size_t>("node_count");
        for (const auto& line : f.nodes()) {
            std::istringstream ls(line);
            std::string type;
            ls >> type;
            if (type == "split") {
                std::string feature, threshold, left, right;
                ls >> feature >> threshold >> left >> right;
                m.nodes.emplace_back(DecisionTreeModel::Split{
                    f.parse<std::size_t>(feature, "split feature"),
                    f.parse<double>(threshold, "split threshold"),
                    f.parse<std::size_t>(left, "split left"),
                    f.parse<std::size_t>(right, "split right")});
            } else if (type == "leaf") {
                std::string pos, neg;
                ls >> pos >> neg;
                DecisionTreeModel::Leaf leaf;
                leaf.counts[index_of(Polarity::Pos)] = f.parse<std::size_t>(pos, "leaf count");
                leaf.counts[index_of(Polarity::Neg)] = f.parse<std::size_t>(neg, "leaf count");
                m.nodes.emplace_back(leaf);
            } else {
                f.fail("unknown node type '" + type + "'");
            }
        }
        if (m.nodes.size() != count || m.root >= count) f.fail("inconsistent node table");
        for (const auto& node : m.nodes) {
            if (const auto* s = std::get_if<DecisionTreeModel::Split>(&node)) {
                if (s->left >= count || s->right >= count) f.fail("split child out of range");
            }
        }
        out.model = std::move(m);
        break;
    }
    case ClassifierKind::LinearSvm: {
        LinearSvmModel m;
        m.regularization_c = f.number<double>("c");
        m.epochs_run = f.number<std::size_t>("epochs");
        m.bias = f.number<double>("bias");
        m.weights = f.doubles("weights");
        m.epoch_objectives = f.doubles("epoch_objectives");
        out.model = std::move(m);
        break;
    }
    }
    return out;
}

}  // namespace sentiment
