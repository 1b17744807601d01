#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentiment/classifier.hpp"
#include "sentiment/corpus.hpp"
#include "sentiment/preprocess.hpp"
#include "sentiment/vectorspace.hpp"

namespace sentiment {

struct InputSettings {
    std::filesystem::path path = "corpus.csv";
    std::string text_column = kDefaultTextColumn;
    std::string label_column = kDefaultLabelColumn;
    /// Dataset label used in the summary table; defaults to the file stem.
    std::string name;
};

struct PreprocessSettings {
    bool erase_punctuation = true;
    bool filter_numbers = true;
    bool lowercase = true;
    bool stem = true;
    bool strip_social_tokens = false;
    /// "english" (compiled-in list), "none", or a path to a stopword file.
    std::string stopwords = "english";
};

/// Fully resolved pipeline configuration. Every field has a default, so an
/// empty JSON object is a valid config.
struct PipelineConfig {
    InputSettings input;
    SplitSpec split;
    PreprocessSettings preprocess;
    VocabularyPolicy vocabulary;
    WeightingScheme weighting;
    std::vector<ClassifierKind> classifiers{kAllClassifiers.begin(), kAllClassifiers.end()};
    TrainConfig train;
    std::filesystem::path report_dir = "report";
};

inline constexpr const char* kReportDirEnv = "SENTIMENT_REPORT_DIR";

/// Parses JSON config text. Relative paths (input.path, a stopword file,
/// output.report_dir) are resolved against `base_dir`. Unknown keys, wrong
/// types and out-of-range values throw UsageError.
PipelineConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir);

/// Reads and parses a config file; relative paths resolve against its directory.
PipelineConfig load_config(const std::filesystem::path& path);

/// Replaces report_dir with $SENTIMENT_REPORT_DIR when that is set and non-empty.
void apply_environment(PipelineConfig& config);

/// The resolved config as pretty-printed JSON with every key present.
/// parse_config(config_to_json(c), any) == c for resolved configs.
std::string config_to_json(const PipelineConfig& config);

PreprocessConfig make_preprocess_config(const PreprocessSettings& settings);

}  // namespace sentiment
