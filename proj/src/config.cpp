#include "sentiment/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sentiment/errors.hpp"

namespace sentiment {

namespace {

using Json = nlohmann::ordered_json;

class Section {
public:
    Section(const Json& parent, const std::string& name) : name_(name) {
        if (!parent.contains(name)) return;
        const Json& node = parent.at(name);
        if (node.is_null()) return;
        if (!node.is_object()) throw UsageError("config: '" + name + "' must be an object");
        node_ = &node;
    }

    template <class T>
    void read(const char* key, T& out) {
        known_.insert(key);
        const Json* v = find(key);
        if (!v) return;
        try {
            out = v->get<T>();
        } catch (const nlohmann::json::exception&) {
            throw UsageError("config: " + where(key) + " has the wrong type");
        }
    }

    template <class U>
    void read_unsigned(const char* key, U& out) {
        known_.insert(key);
        const Json* v = find(key);
        if (!v) return;
        if (!v->is_number_unsigned()) throw UsageError("config: " + where(key) + " must be a non-negative integer");
        out = v->get<U>();
    }

    void read_number(const char* key, double& out) {
        known_.insert(key);
        const Json* v = find(key);
        if (!v) return;
        if (!v->is_number()) throw UsageError("config: " + where(key) + " must be a number");
        out = v->get<double>();
    }

    const Json* find(const char* key) {
        known_.insert(key);
        if (!node_ || !node_->contains(key)) return nullptr;
        const Json& v = node_->at(key);
        return v.is_null() ? nullptr : &v;
    }

    std::string where(const char* key) const { return name_ + "." + key; }

    void reject_unknown() const {
        if (!node_) return;
        for (const auto& [key, value] : node_->items()) {
            if (!known_.contains(key)) throw UsageError("config: unknown key " + name_ + "." + key);
        }
    }

private:
    std::string name_;
    const Json* node_ = nullptr;
    std::set<std::string, std::less<>> known_;
};

std::filesystem::path resolve(const std::filesystem::path& p, const std::filesystem::path& base) {
    if (p.empty() || p.is_absolute()) return p;
    return (base / p).lexically_normal();
}

std::vector<std::string> string_list(const Json& v, const std::string& where) {
    if (!v.is_array()) throw UsageError("config: " + where + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : v) {
        if (!item.is_string()) throw UsageError("config: " + where + " must be an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

PipelineConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
    Json root;
    try {
        root = Json::parse(json_text.begin(), json_text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("config: invalid JSON: ") + e.what());
    }
    if (root.is_null()) root = Json::object();
    if (!root.is_object()) throw UsageError("config: top level must be an object");

    static const std::set<std::string, std::less<>> sections{
        "input", "split", "preprocess", "vocabulary", "weighting", "classifiers", "output"};
    for (const auto& [key, value] : root.items()) {
        if (!sections.contains(key)) throw UsageError("config: unknown section '" + key + "'");
    }

    PipelineConfig c;

    Section input(root, "input");
    std::string input_path = c.input.path.string();
    input.read("path", input_path);
    input.read("text_column", c.input.text_column);
    input.read("label_column", c.input.label_column);
    input.read("name", c.input.name);
    input.reject_unknown();
    c.input.path = resolve(input_path, base_dir);
    if (c.input.name.empty()) c.input.name = c.input.path.stem().string();

    Section split(root, "split");
    split.read_number("test_fraction", c.split.test_fraction);
    split.read_unsigned("seed", c.split.seed);
    split.reject_unknown();
    if (!(c.split.test_fraction > 0.0 && c.split.test_fraction < 1.0)) {
        throw UsageError("config: split.test_fraction must lie strictly between 0 and 1");
    }

    Section prep(root, "preprocess");
    prep.read("erase_punctuation", c.preprocess.erase_punctuation);
    prep.read("filter_numbers", c.preprocess.filter_numbers);
    prep.read("lowercase", c.preprocess.lowercase);
    prep.read("stem", c.preprocess.stem);
    prep.read("strip_social_tokens", c.preprocess.strip_social_tokens);
    prep.read("stopwords", c.preprocess.stopwords);
    prep.reject_unknown();
    if (c.preprocess.stopwords.empty()) throw UsageError("config: preprocess.stopwords must not be empty");
    if (c.preprocess.stopwords != "english" && c.preprocess.stopwords != "none") {
        c.preprocess.stopwords = resolve(c.preprocess.stopwords, base_dir).string();
    }

    Section vocab(root, "vocabulary");
    vocab.read_unsigned("min_doc_freq", c.vocabulary.min_doc_freq);
    if (const Json* v = vocab.find("max_terms")) {
        if (!v->is_number_unsigned()) throw UsageError("config: vocabulary.max_terms must be a non-negative integer or null");
        c.vocabulary.max_terms = v->get<std::size_t>();
    }
    if (const Json* v = vocab.find("manual_terms")) {
        c.vocabulary.manual_terms = string_list(*v, "vocabulary.manual_terms");
    }
    vocab.reject_unknown();
    if (c.vocabulary.min_doc_freq < 1) throw UsageError("config: vocabulary.min_doc_freq must be at least 1");
    if (c.vocabulary.max_terms && *c.vocabulary.max_terms == 0) {
        throw UsageError("config: vocabulary.max_terms must be positive");
    }

    Section weighting(root, "weighting");
    if (const Json* v = weighting.find("tf")) {
        const auto tf = v->is_string() ? parse_tf_variant(v->get<std::string>()) : std::nullopt;
        if (!tf) throw UsageError("config: weighting.tf must be one of RAW, LOG, AUGMENTED, BINARY");
        c.weighting.tf = *tf;
    }
    weighting.read("idf", c.weighting.use_idf);
    weighting.reject_unknown();

    Section clf(root, "classifiers");
    if (const Json* v = clf.find("enabled")) {
        c.classifiers.clear();
        for (const auto& name : string_list(*v, "classifiers.enabled")) {
            const auto kind = parse_classifier_kind(name);
            if (!kind) throw UsageError("config: unknown classifier '" + name + "' (expected nb, dt or svm)");
            if (std::find(c.classifiers.begin(), c.classifiers.end(), *kind) != c.classifiers.end()) {
                throw UsageError("config: classifier '" + name + "' listed twice");
            }
            c.classifiers.push_back(*kind);
        }
        if (c.classifiers.empty()) throw UsageError("config: classifiers.enabled must not be empty");
    }
    clf.read_number("nb_alpha", c.train.nb_alpha);
    clf.read_unsigned("dt_max_depth", c.train.dt_max_depth);
    clf.read_unsigned("dt_min_leaf", c.train.dt_min_leaf);
    clf.read_number("svm_c", c.train.svm_c);
    clf.read_unsigned("svm_epochs", c.train.svm_epochs);
    clf.read("svm_l2_normalize", c.train.svm_l2_normalize);
    clf.read_unsigned("seed", c.train.seed);
    clf.reject_unknown();
    if (!(c.train.nb_alpha > 0.0)) throw UsageError("config: classifiers.nb_alpha must be positive");
    if (c.train.dt_min_leaf < 1) throw UsageError("config: classifiers.dt_min_leaf must be at least 1");
    if (!(c.train.svm_c > 0.0)) throw UsageError("config: classifiers.svm_c must be positive");
    if (c.train.svm_epochs < 1) throw UsageError("config: classifiers.svm_epochs must be at least 1");

    Section output(root, "output");
    std::string report_dir = c.report_dir.string();
    output.read("report_dir", report_dir);
    output.reject_unknown();
    c.report_dir = resolve(report_dir, base_dir);

    return c;
}

PipelineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto base = std::filesystem::absolute(path).parent_path();
    return parse_config(buf.str(), base);
}

void apply_environment(PipelineConfig& config) {
    if (const char* dir = std::getenv(kReportDirEnv); dir && *dir) config.report_dir = dir;
}

std::string config_to_json(const PipelineConfig& c) {
    Json j;
    j["input"] = {{"path", c.input.path.string()},
                  {"text_column", c.input.text_column},
                  {"label_column", c.input.label_column},
                  {"name", c.input.name}};
    j["split"] = {{"test_fraction", c.split.test_fraction}, {"seed", c.split.seed}};
    j["preprocess"] = {{"erase_punctuation", c.preprocess.erase_punctuation},
                       {"filter_numbers", c.preprocess.filter_numbers},
                       {"lowercase", c.preprocess.lowercase},
                       {"stem", c.preprocess.stem},
                       {"strip_social_tokens", c.preprocess.strip_social_tokens},
                       {"stopwords", c.preprocess.stopwords}};
    j["vocabulary"] = {{"min_doc_freq", c.vocabulary.min_doc_freq},
                       {"max_terms", c.vocabulary.max_terms ? Json(*c.vocabulary.max_terms) : Json()},
                       {"manual_terms",
                        c.vocabulary.manual_terms ? Json(*c.vocabulary.manual_terms) : Json()}};
    j["weighting"] = {{"tf", std::string(to_string(c.weighting.tf))}, {"idf", c.weighting.use_idf}};
    Json enabled = Json::array();
    for (auto k : c.classifiers) enabled.push_back(std::string(to_string(k)));
    j["classifiers"] = {{"enabled", enabled},
                        {"nb_alpha", c.train.nb_alpha},
                        {"dt_max_depth", c.train.dt_max_depth},
                        {"dt_min_leaf", c.train.dt_min_leaf},
                        {"svm_c", c.train.svm_c},
                        {"svm_epochs", c.train.svm_epochs},
                        {"svm_l2_normalize", c.train.svm_l2_normalize},
                        {"seed", c.train.seed}};
    j["output"] = {{"report_dir", c.report_dir.string()}};
    return j.dump(2);
}

PreprocessConfig make_preprocess_config(const PreprocessSettings& s) {
    PreprocessConfig p;
    p.erase_punctuation = s.erase_punctuation;
    p.filter_numbers = s.filter_numbers;
    p.lowercase = s.lowercase;
    p.stem = s.stem;
    p.strip_social_tokens = s.strip_social_tokens;
    if (s.stopwords == "english") {
        p.stopwords = english_stopwords();
    } else if (s.stopwords != "none") {
        p.stopwords = load_stopwords(s.stopwords);
    }
    return p;
}

}  // namespace sentiment
