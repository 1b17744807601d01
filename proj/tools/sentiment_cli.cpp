// Command-line front end: `run` executes the whole pipeline from a config
// file; the other subcommands run one stage each on dump files.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sentiment/errors.hpp"
#include "sentiment/pipeline.hpp"

namespace fs = std::filesystem;
using namespace sentiment;

namespace {

PipelineConfig config_or_default(const std::string& path) {
    if (path.empty()) return parse_config("{}", fs::current_path());
    return load_config(path);
}

ClassifierKind classifier_arg(const std::string& name) {
    const auto kind = parse_classifier_kind(name);
    if (!kind) throw UsageError("unknown classifier '" + name + "' (expected nb, dt or svm)");
    return *kind;
}

ConfusionMatrix counts_arg(const std::string& text, const std::string& positive) {
    std::vector<std::size_t> n;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size() || part.front() == '-') {
            throw UsageError("--from-counts expects four non-negative integers tp,fp,tn,fn");
        }
        n.push_back(static_cast<std::size_t>(v));
    }
    if (n.size() != 4) throw UsageError("--from-counts expects four non-negative integers tp,fp,tn,fn");
    const auto p = parse_polarity(positive);
    if (!p) throw UsageError("--positive must be POS or NEG");
    return ConfusionMatrix{*p, n[0], n[1], n[2], n[3]};
}

void print_metrics(const ConfusionMatrix& cm, std::ostream& out) {
    const MetricsRow m = metrics(cm);
    char buf[64];
    const auto line = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%-12s %.6f\n", key, v);
        out << buf;
    };
    out << "positive_class " << to_string(cm.positive_class) << "\n";
    out << "counts       tp=" << cm.tp << " fp=" << cm.fp << " tn=" << cm.tn << " fn=" << cm.fn << "\n";
    line("recall", m.recall);
    line("precision", m.precision);
    line("sensitivity", m.sensitivity);
    line("specificity", m.specificity);
    line("f_measure", m.f_measure);
    line("accuracy", m.accuracy);
    if (m.degenerate_precision) out << "note         precision set to 0 because tp+fp=0\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sentiment classification pipeline"};
    app.require_subcommand(1);

    std::string config_path;
    std::string in_path;
    std::string out_path;
    std::string vocab_path;
    std::string model_path;
    std::string classifier;
    std::string counts;
    std::string positive = "POS";
    bool as_json = false;

    auto* run = app.add_subcommand("run", "Run every stage from a config file");
    run->add_option("--config", config_path, "JSON config file")->required();

    auto* prep = app.add_subcommand("prep", "Load, split and preprocess a corpus into a terms file");
    prep->add_option("--config", config_path, "JSON config file");
    prep->add_option("--in", in_path, "Corpus CSV (overrides input.path)");
    prep->add_option("--out", out_path, "Terms file to write")->required();

    auto* vocab = app.add_subcommand("vocab", "Build the vocabulary from a terms file");
    vocab->add_option("--config", config_path, "JSON config file");
    vocab->add_option("--in", in_path, "Terms file")->required();
    vocab->add_option("--out", out_path, "Vocabulary file to write")->required();

    auto* train_cmd = app.add_subcommand("train", "Train one classifier");
    train_cmd->add_option("--config", config_path, "JSON config file");
    train_cmd->add_option("--in", in_path, "Terms file")->required();
    train_cmd->add_option("--vocab", vocab_path, "Vocabulary file")->required();
    train_cmd->add_option("--classifier", classifier, "nb, dt or svm")->required();
    train_cmd->add_option("--out", out_path, "Model file to write")->required();

    auto* score_cmd = app.add_subcommand("score", "Score every document of a terms file");
    score_cmd->add_option("--in", in_path, "Terms file")->required();
    score_cmd->add_option("--vocab", vocab_path, "Vocabulary file")->required();
    score_cmd->add_option("--model", model_path, "Model file")->required();
    score_cmd->add_option("--out", out_path, "Scores CSV to write")->required();

    auto* eval = app.add_subcommand("eval", "Evaluate a scores file, or metrics from raw counts");
    auto* eval_in = eval->add_option("--in", in_path, "Scores CSV");
    eval->add_option("--out", out_path, "Directory for ROC and confusion CSVs");
    auto* from_counts =
        eval->add_option("--from-counts", counts, "Confusion counts tp,fp,tn,fn");
    eval->add_option("--positive", positive, "Positive class for --from-counts (POS or NEG)");
    eval->add_flag("--json", as_json, "Print JSON instead of text");
    eval_in->excludes(from_counts);

    auto* report = app.add_subcommand("report", "Rebuild report.json from stage outputs in a directory");
    report->add_option("--config", config_path, "JSON config file");
    report->add_option("--in", in_path, "Directory holding the stage outputs")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) {
            PipelineConfig config = load_config(config_path);
            apply_environment(config);
            const RunResult result = run_pipeline(config);
            std::cout << "report written to " << (result.report_dir / artifact::kReport).string() << "\n";
            std::ifstream summary(result.report_dir / artifact::kSummary);
            std::cout << summary.rdbuf();
        } else if (prep->parsed()) {
            PipelineConfig config = config_or_default(config_path);
            if (!in_path.empty()) {
                config.input.path = in_path;
                config.input.name = fs::path(in_path).stem().string();
            }
            write_terms(prepare_corpus(config), out_path);
        } else if (vocab->parsed()) {
            const PipelineConfig config = config_or_default(config_path);
            save_vocabulary(build_training_vocabulary(read_terms(in_path), config), out_path);
        } else if (train_cmd->parsed()) {
            const PipelineConfig config = config_or_default(config_path);
            const TrainedModel model = train_classifier(classifier_arg(classifier), read_terms(in_path),
                                                        load_vocabulary(vocab_path), config);
            save_model(model, out_path);
        } else if (score_cmd->parsed()) {
            const TrainedModel model = load_model(model_path);
            write_scores(score_corpus(model, read_terms(in_path), load_vocabulary(vocab_path)), out_path);
        } else if (eval->parsed()) {
            if (!counts.empty()) {
                const ConfusionMatrix cm = counts_arg(counts, positive);
                if (as_json) {
                    std::cout << metrics_json(cm) << "\n";
                } else {
                    print_metrics(cm, std::cout);
                }
            } else if (!in_path.empty()) {
                const ClassifierEvaluation result = evaluate_scores(read_scores(in_path));
                if (!out_path.empty()) {
                    fs::create_directories(out_path);
                    write_evaluation_files(result, out_path);
                }
                for (Polarity p : kPolarities) {
                    if (as_json) {
                        std::cout << metrics_json(result.confusion[index_of(p)]) << "\n";
                    } else {
                        print_metrics(result.confusion[index_of(p)], std::cout);
                        char buf[64];
                        std::snprintf(buf, sizeof buf, "auc          %.6f\n\n", result.roc[index_of(p)].auc);
                        std::cout << buf;
                    }
                }
            } else {
                throw UsageError("eval needs --in or --from-counts");
            }
        } else if (report->parsed()) {
            const PipelineConfig config = config_or_default(config_path);
            write_report(config, in_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
