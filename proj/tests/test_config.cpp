#include <gtest/gtest.h>

#include <cstdlib>

#include "sentiment/config.hpp"
#include "sentiment/errors.hpp"
#include "test_util.hpp"

using namespace sentiment;
namespace fs = std::filesystem;

TEST(Config, EmptyObjectMeansDefaults) {
    const auto c = parse_config("{}", "/base");
    EXPECT_EQ(c.input.path, fs::path("/base/corpus.csv"));
    EXPECT_EQ(c.input.text_column, "text");
    EXPECT_EQ(c.input.label_column, "sentiment");
    EXPECT_EQ(c.input.name, "corpus");
    EXPECT_DOUBLE_EQ(c.split.test_fraction, 0.30);
    EXPECT_EQ(c.split.seed, 42u);
    EXPECT_TRUE(c.preprocess.stem);
    EXPECT_FALSE(c.preprocess.strip_social_tokens);
    EXPECT_EQ(c.preprocess.stopwords, "english");
    EXPECT_EQ(c.vocabulary.min_doc_freq, 2u);
    EXPECT_EQ(c.weighting, (WeightingScheme{TfVariant::Raw, true}));
    EXPECT_EQ(c.classifiers.size(), 3u);
    EXPECT_EQ(c.train.dt_max_depth, 10u);
    EXPECT_EQ(c.train.dt_min_leaf, 2u);
    EXPECT_DOUBLE_EQ(c.train.svm_c, 1.0);
    EXPECT_EQ(c.train.svm_epochs, 20u);
    EXPECT_EQ(c.report_dir, fs::path("/base/report"));

    const auto empty_sections = parse_config(R"({"input": {}, "split": null, "classifiers": {}})", "/base");
    EXPECT_EQ(config_to_json(empty_sections), config_to_json(c));
}

TEST(Config, OverridesAndPaths) {
    const auto c = parse_config(R"({
        "input": {"path": "data/x.csv", "name": "Tweets"},
        "split": {"test_fraction": 0.25, "seed": 7},
        "preprocess": {"strip_social_tokens": true, "stopwords": "lists/sw.txt"},
        "vocabulary": {"min_doc_freq": 1, "max_terms": 50, "manual_terms": ["appl", "phone"]},
        "weighting": {"tf": "log", "idf": false},
        "classifiers": {"enabled": ["svm", "nb"], "svm_c": 2.5, "svm_l2_normalize": true},
        "output": {"report_dir": "/abs/out"}
    })", "/cfg");
    EXPECT_EQ(c.input.path, fs::path("/cfg/data/x.csv"));
    EXPECT_EQ(c.input.name, "Tweets");
    EXPECT_EQ(c.split.seed, 7u);
    EXPECT_EQ(c.preprocess.stopwords, "/cfg/lists/sw.txt");
    EXPECT_EQ(c.vocabulary.max_terms, 50u);
    EXPECT_EQ(c.vocabulary.manual_terms, (std::vector<std::string>{"appl", "phone"}));
    EXPECT_EQ(c.weighting, (WeightingScheme{TfVariant::Log, false}));
    EXPECT_EQ(c.classifiers, (std::vector<ClassifierKind>{ClassifierKind::LinearSvm, ClassifierKind::NaiveBayes}));
    EXPECT_DOUBLE_EQ(c.train.svm_c, 2.5);
    EXPECT_TRUE(c.train.svm_l2_normalize);
    EXPECT_EQ(c.report_dir, fs::path("/abs/out"));
}

TEST(Config, EchoRoundTrips) {
    const auto c = parse_config(R"({"vocabulary": {"max_terms": 9}, "weighting": {"tf": "BINARY"},
                                    "classifiers": {"enabled": ["dt"], "nb_alpha": 0.5}})", "/x");
    const auto echoed = config_to_json(c);
    EXPECT_EQ(config_to_json(parse_config(echoed, "/elsewhere")), echoed);
    for (const char* key : {"\"test_fraction\"", "\"min_doc_freq\"", "\"max_terms\"", "\"manual_terms\"",
                            "\"svm_epochs\"", "\"dt_min_leaf\"", "\"report_dir\"", "\"stopwords\""}) {
        EXPECT_NE(echoed.find(key), std::string::npos) << key;
    }
}

TEST(Config, RejectsInvalid) {
    for (const char* bad : {"[", "[]", R"({"inptu": {}})", R"({"input": {"colour": 1}})",
                            R"({"split": {"test_fraction": 1.5}})", R"({"split": {"seed": -1}})",
                            R"({"weighting": {"tf": "SQRT"}})", R"({"classifiers": {"enabled": ["knn"]}})",
                            R"({"classifiers": {"enabled": []}})", R"({"classifiers": {"enabled": ["nb", "nb"]}})",
                            R"({"classifiers": {"svm_c": 0}})", R"({"vocabulary": {"min_doc_freq": 0}})",
                            R"({"preprocess": {"stem": "yes"}})", R"({"input": "x.csv"})"}) {
        EXPECT_THROW(parse_config(bad, "/"), UsageError) << bad;
    }
}

TEST(Config, EnvironmentOverridesReportDir) {
    auto c = parse_config("{}", "/base");
    ::setenv(kReportDirEnv, "/tmp/elsewhere", 1);
    apply_environment(c);
    ::unsetenv(kReportDirEnv);
    EXPECT_EQ(c.report_dir, fs::path("/tmp/elsewhere"));
    ::setenv(kReportDirEnv, "", 1);
    apply_environment(c);
    ::unsetenv(kReportDirEnv);
    EXPECT_EQ(c.report_dir, fs::path("/tmp/elsewhere"));
}

TEST(Config, LoadResolvesAgainstFileDirectory) {
    testutil::TempDir dir;
    fs::create_directories(dir / "sub");
    testutil::write_file(dir / "sub" / "c.json", R"({"input": {"path": "in.csv"}})");
    const auto c = load_config(dir / "sub" / "c.json");
    EXPECT_EQ(c.input.path, fs::absolute(dir / "sub" / "in.csv"));
    EXPECT_THROW(load_config(dir / "missing.json"), UsageError);
}

TEST(Config, PreprocessSettingsBuildStopwords) {
    PreprocessSettings s;
    EXPECT_EQ(make_preprocess_config(s).stopwords, english_stopwords());
    s.stopwords = "none";
    EXPECT_TRUE(make_preprocess_config(s).stopwords.empty());
    testutil::TempDir dir;
    testutil::write_file(dir / "sw.txt", "foo\nbar\n");
    s.stopwords = (dir / "sw.txt").string();
    EXPECT_EQ(make_preprocess_config(s).stopwords, (StopwordList{"bar", "foo"}));
}
