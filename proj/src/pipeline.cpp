#include "sentiment/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "sentiment/errors.hpp"

namespace sentiment {

namespace fs = std::filesystem;

namespace artifact {
std::string model(ClassifierKind k) { return std::string(to_string(k)) + ".model"; }
std::string scores(ClassifierKind k) { return "scores_" + std::string(to_string(k)) + ".csv"; }
std::string roc(ClassifierKind k, Polarity p) {
    return "roc_" + std::string(to_string(k)) + "_" + std::string(to_string(p)) + ".csv";
}
std::string confusion(ClassifierKind k) { return "confusion_" + std::string(to_string(k)) + ".csv"; }
}  // namespace artifact

namespace {

using Json = nlohmann::ordered_json;

double sig6(double v) {
    if (!std::isfinite(v)) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::strtod(buf, nullptr);
}

Json metrics_object(const ConfusionMatrix& cm) {
    const MetricsRow m = metrics(cm);
    return Json{{"recall", sig6(m.recall)},
                {"precision", sig6(m.precision)},
                {"precision_degenerate", m.degenerate_precision},
                {"sensitivity", sig6(m.sensitivity)},
                {"specificity", sig6(m.specificity)},
                {"f_measure", sig6(m.f_measure)},
                {"accuracy", sig6(m.accuracy)},
                {"confusion",
                 {{"positive_class", std::string(to_string(cm.positive_class))},
                  {"tp", cm.tp},
                  {"fp", cm.fp},
                  {"tn", cm.tn},
                  {"fn", cm.fn}}}};
}

Json split_counts(const std::vector<ProcessedDocument>& docs) {
    std::size_t pos = 0;
    for (const auto& d : docs) pos += d.label == Polarity::Pos;
    return Json{{"POS", pos}, {"NEG", docs.size() - pos}, {"total", docs.size()}};
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << text;
    if (!out) throw DataError("error writing " + path.string());
}

template <class F>
void in_stage(const std::string& name, F&& body) {
    try {
        body();
    } catch (const UsageError& e) {
        throw UsageError("stage '" + name + "': " + e.what());
    } catch (const DataError& e) {
        throw DataError("stage '" + name + "': " + e.what());
    } catch (const std::exception& e) {
        throw DataError("stage '" + name + "': " + e.what());
    }
}

// Remembers output paths that did not exist before the run so a failed run
// can remove exactly those.
class CreatedFiles {
public:
    explicit CreatedFiles(fs::path dir) : dir_(std::move(dir)) {}

    void make_dir() {
        if (!fs::exists(dir_)) {
            fs::create_directories(dir_);
            dir_created_ = true;
        }
    }

    fs::path claim(const std::string& name) {
        fs::path p = dir_ / name;
        if (!fs::exists(p)) created_.push_back(p);
        return p;
    }

    void rollback() noexcept {
        std::error_code ec;
        for (const auto& p : created_) fs::remove(p, ec);
        if (dir_created_ && fs::is_empty(dir_, ec)) fs::remove(dir_, ec);
    }

private:
    fs::path dir_;
    bool dir_created_ = false;
    std::vector<fs::path> created_;
};

}  // namespace

PreparedCorpus prepare_corpus(const PipelineConfig& config) {
    const LabeledCorpus corpus =
        load_csv(config.input.path, config.input.text_column, config.input.label_column);
    const Split split = stratified_split(corpus, config.split);
    const PreprocessConfig prep = make_preprocess_config(config.preprocess);
    PreparedCorpus out;
    out.train.reserve(split.train.size());
    out.test.reserve(split.test.size());
    for (const auto& d : split.train.documents) out.train.push_back(preprocess_document(d, prep));
    for (const auto& d : split.test.documents) out.test.push_back(preprocess_document(d, prep));
    return out;
}

Vocabulary build_training_vocabulary(const PreparedCorpus& corpus, const PipelineConfig& config) {
    return build_vocabulary(corpus.train, config.vocabulary);
}

std::vector<DocumentVector> vectorize_all(const std::vector<ProcessedDocument>& docs,
                                          const Vocabulary& vocab, const WeightingScheme& scheme) {
    std::vector<DocumentVector> out;
    out.reserve(docs.size());
    for (const auto& d : docs) out.push_back(vectorize(d, vocab, scheme));
    return out;
}

TrainedModel train_classifier(ClassifierKind kind, const PreparedCorpus& corpus,
                              const Vocabulary& vocab, const PipelineConfig& config) {
    const auto vectors = vectorize_all(corpus.train, vocab, config.weighting);
    return train(kind, vectors, vocab.size(), config.weighting, config.train);
}

ScoreTable score_corpus(const TrainedModel& model, const PreparedCorpus& corpus,
                        const Vocabulary& vocab) {
    ScoreTable table;
    table.kind = model.kind();
    const auto add = [&](const ProcessedDocument& d, SplitRole role) {
        if (!d.label) throw DataError("document " + std::to_string(d.id) + " has no label");
        const double s = score(model, vectorize(d, vocab, model.features.weighting));
        table.rows.push_back({d.id, *d.label, role, s, predict(table.kind, s)});
    };
    for (const auto& d : corpus.train) add(d, SplitRole::Train);
    for (const auto& d : corpus.test) add(d, SplitRole::Test);
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const ScoreRow& a, const ScoreRow& b) { return a.id < b.id; });
    return table;
}

ClassifierEvaluation evaluate_scores(const ScoreTable& table) {
    std::vector<Polarity> truths;
    std::vector<Polarity> preds;
    std::vector<double> scores;
    for (const auto& r : table.rows) {
        if (r.split != SplitRole::Test) continue;
        truths.push_back(r.label);
        preds.push_back(r.prediction);
        scores.push_back(r.score);
    }
    if (truths.empty()) throw DataError("no test-split rows to evaluate");

    ClassifierEvaluation eval;
    eval.kind = table.kind;
    eval.test_size = truths.size();
    std::vector<double> negated(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) negated[i] = -scores[i];
    for (Polarity p : kPolarities) {
        const auto i = index_of(p);
        eval.confusion[i] = confusion(preds, truths, p);
        eval.metrics[i] = metrics(eval.confusion[i]);
        eval.roc[i] = roc_curve(p == Polarity::Pos ? scores : negated, truths, p);
    }
    return eval;
}

void write_evaluation_files(const ClassifierEvaluation& eval, const fs::path& dir) {
    for (Polarity p : kPolarities) {
        std::ofstream out(dir / artifact::roc(eval.kind, p), std::ios::binary);
        if (!out) throw DataError("cannot write " + (dir / artifact::roc(eval.kind, p)).string());
        write_roc_csv(eval.roc[index_of(p)], out);
    }
    std::ofstream out(dir / artifact::confusion(eval.kind), std::ios::binary);
    if (!out) throw DataError("cannot write " + (dir / artifact::confusion(eval.kind)).string());
    const std::array<ConfusionMatrix, 2> rows{eval.confusion[index_of(Polarity::Pos)],
                                              eval.confusion[index_of(Polarity::Neg)]};
    write_confusion_csv(rows, out);
}

std::string metrics_json(const ConfusionMatrix& cm) { return metrics_object(cm).dump(2); }

std::string write_report(const PipelineConfig& config, const fs::path& dir,
                         std::span<const StageTiming> timings) {
    const PreparedCorpus corpus = read_terms(dir / artifact::kTerms);
    const Vocabulary vocab = load_vocabulary(dir / artifact::kVocab);

    Json report;
    report["format"] = "sentiment-report v1";
    report["config"] = Json::parse(config_to_json(config));
    report["corpus"] = {{"dataset", config.input.name},
                        {"train", split_counts(corpus.train)},
                        {"test", split_counts(corpus.test)},
                        {"vocab_size", vocab.size()}};

    Json classifiers = Json::object();
    std::vector<SummaryEntry> summary;
    for (ClassifierKind kind : config.classifiers) {
        const std::string name(to_string(kind));
        const auto scores_path = dir / artifact::scores(kind);
        const ScoreTable table = read_scores(scores_path);
        if (table.kind != kind) {
            throw DataError(scores_path.string() + ": holds scores for '" +
                            std::string(to_string(table.kind)) + "'");
        }
        if (table.rows.size() != corpus.train.size() + corpus.test.size()) {
            throw DataError(scores_path.string() + ": row count does not match " + artifact::kTerms);
        }
        const ClassifierEvaluation eval = evaluate_scores(table);
        write_evaluation_files(eval, dir);

        const auto pos = index_of(Polarity::Pos);
        const auto neg = index_of(Polarity::Neg);
        Json entry;
        entry["test_size"] = eval.test_size;
        entry["accuracy"] = sig6(eval.metrics[pos].accuracy);
        entry["auc"] = {{"POS", sig6(eval.roc[pos].auc)}, {"NEG", sig6(eval.roc[neg].auc)}};
        entry["per_class"] = {{"POS", metrics_object(eval.confusion[pos])},
                              {"NEG", metrics_object(eval.confusion[neg])}};
        entry["artifacts"] = {{"model", artifact::model(kind)},
                              {"scores", artifact::scores(kind)},
                              {"roc_POS", artifact::roc(kind, Polarity::Pos)},
                              {"roc_NEG", artifact::roc(kind, Polarity::Neg)},
                              {"confusion", artifact::confusion(kind)}};
        classifiers[name] = std::move(entry);
        summary.push_back({config.input.name, name, eval.metrics[pos].accuracy, eval.roc[pos].auc});
    }
    report["classifiers"] = std::move(classifiers);
    report["artifacts"] = {{"terms", artifact::kTerms},
                           {"vocab", artifact::kVocab},
                           {"summary", artifact::kSummary}};
    Json timing = Json::object();
    for (const auto& t : timings) timing[t.stage] = std::round(t.milliseconds * 1000.0) / 1000.0;
    report["timings_ms"] = std::move(timing);

    write_text(dir / artifact::kSummary, render_summary(summary_table(summary)));
    std::string text = report.dump(2) + "\n";
    write_text(dir / artifact::kReport, text);
    return text;
}

RunResult run_pipeline(const PipelineConfig& config) {
    RunResult result;
    result.report_dir = config.report_dir;
    const fs::path& dir = config.report_dir;
    CreatedFiles files(dir);

    const auto timed = [&](const std::string& stage, auto&& body) {
        const auto start = std::chrono::steady_clock::now();
        in_stage(stage, body);
        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        result.timings.push_back({stage, elapsed.count()});
    };

    try {
        in_stage("output", [&] { files.make_dir(); });

        PreparedCorpus corpus;
        timed("prep", [&] {
            corpus = prepare_corpus(config);
            write_terms(corpus, files.claim(artifact::kTerms));
        });
        Vocabulary vocab;
        timed("vocab", [&] {
            vocab = build_training_vocabulary(corpus, config);
            save_vocabulary(vocab, files.claim(artifact::kVocab));
        });
        for (ClassifierKind kind : config.classifiers) {
            const std::string name(to_string(kind));
            TrainedModel model;
            timed("train_" + name, [&] {
                model = train_classifier(kind, corpus, vocab, config);
                save_model(model, files.claim(artifact::model(kind)));
            });
            timed("score_" + name, [&] {
                write_scores(score_corpus(model, corpus, vocab), files.claim(artifact::scores(kind)));
            });
            files.claim(artifact::roc(kind, Polarity::Pos));
            files.claim(artifact::roc(kind, Polarity::Neg));
            files.claim(artifact::confusion(kind));
        }
        files.claim(artifact::kSummary);
        files.claim(artifact::kReport);
        in_stage("report", [&] { result.report_json = write_report(config, dir, result.timings); });
    } catch (...) {
        files.rollback();
        throw;
    }
    return result;
}

}  // namespace sentiment
