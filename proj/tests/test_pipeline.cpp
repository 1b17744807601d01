#include <gtest/gtest.h>

#include <json.hpp>

#include "sentiment/errors.hpp"
#include "sentiment/pipeline.hpp"
#include "test_util.hpp"

using namespace sentiment;
using testutil::shell_quote;
using testutil::read_file;
using testutil::run_command;
using testutil::TempDir;
using testutil::write_file;
namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

const fs::path kFixture = fs::path(SENTIMENT_DATA_DIR) / "polarity_fixture.csv";
const std::string kCli = SENTIMENT_CLI;

PipelineConfig fixture_config(const fs::path& out, const std::string& extra = "") {
    const std::string json = R"({"input": {"path": ")" + kFixture.string() + R"("}, "output": {"report_dir": ")" +
                             out.string() + "\"}" + extra + "}";
    return parse_config(json, "/");
}

Json without_timings(const std::string& report) {
    Json j = Json::parse(report);
    j.erase("timings_ms");
    return j;
}

std::string cli(const std::string& args) { return shell_quote(kCli) + " " + args; }

}  // namespace

TEST(Pipeline, FixtureRunProducesFullReport) {
    TempDir dir;
    const auto result = run_pipeline(fixture_config(dir / "out"));
    const Json report = Json::parse(result.report_json);
    EXPECT_EQ(read_file(dir / "out" / "report.json"), result.report_json);

    const std::size_t test_size = report["corpus"]["test"]["total"];
    ASSERT_EQ(report["classifiers"].size(), 3u);
    for (const auto& [name, entry] : report["classifiers"].items()) {
        const double acc = entry["accuracy"];
        EXPECT_GE(acc, 0.0);
        EXPECT_LE(acc, 1.0);
        for (const char* cls : {"POS", "NEG"}) {
            const auto& cm = entry["per_class"][cls]["confusion"];
            EXPECT_EQ(cm["tp"].get<std::size_t>() + cm["fp"].get<std::size_t>() + cm["tn"].get<std::size_t>() +
                          cm["fn"].get<std::size_t>(),
                      test_size);
        }
        for (const auto& [key, file] : entry["artifacts"].items()) {
            EXPECT_TRUE(fs::exists(dir / "out" / file.get<std::string>())) << file;
        }
    }
    for (const char* key : {"config", "corpus", "classifiers", "artifacts", "timings_ms"}) {
        EXPECT_TRUE(report.contains(key)) << key;
    }
    EXPECT_EQ(report["config"]["classifiers"]["svm_epochs"], 20);
    EXPECT_FALSE(read_file(dir / "out" / "summary.txt").empty());
}

TEST(Pipeline, OnlyNaiveBayes) {
    TempDir dir;
    const auto result = run_pipeline(fixture_config(dir / "out", R"(, "classifiers": {"enabled": ["nb"]})"));
    const Json report = Json::parse(result.report_json);
    ASSERT_EQ(report["classifiers"].size(), 1u);
    EXPECT_TRUE(report["classifiers"].contains("nb"));
    EXPECT_FALSE(fs::exists(dir / "out" / "dt.model"));
}

TEST(Pipeline, RepeatedRunsMatchExceptTimings) {
    TempDir dir;
    const auto config = fixture_config(dir / "out", R"(, "weighting": {"tf": "AUGMENTED"})");
    const auto first = run_pipeline(config).report_json;
    const auto scores = read_file(dir / "out" / "scores_svm.csv");
    const auto second = run_pipeline(config).report_json;
    EXPECT_EQ(without_timings(first).dump(), without_timings(second).dump());
    EXPECT_EQ(read_file(dir / "out" / "scores_svm.csv"), scores);
}

TEST(Pipeline, ReportRebuildMatchesRun) {
    TempDir dir;
    const auto config = fixture_config(dir / "out");
    const auto run_report = run_pipeline(config).report_json;
    const auto rebuilt = write_report(config, dir / "out");
    EXPECT_EQ(without_timings(rebuilt).dump(), without_timings(run_report).dump());
}

TEST(Pipeline, FailureRemovesCreatedFilesOnly) {
    TempDir dir;
    fs::create_directories(dir / "out");
    write_file(dir / "out" / "keep.txt", "mine");
    const auto config = fixture_config(dir / "out", R"(, "vocabulary": {"manual_terms": ["zzzz"]})");
    try {
        run_pipeline(config);
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("stage 'vocab'"), std::string::npos) << e.what();
    }
    EXPECT_FALSE(fs::exists(dir / "out" / "prep.terms"));
    EXPECT_EQ(read_file(dir / "out" / "keep.txt"), "mine");

    const auto fresh = fixture_config(dir / "fresh", R"(, "vocabulary": {"manual_terms": ["zzzz"]})");
    EXPECT_THROW(run_pipeline(fresh), DataError);
    EXPECT_FALSE(fs::exists(dir / "fresh"));
}

TEST(Pipeline, MissingInputIsDataError) {
    TempDir dir;
    auto config = fixture_config(dir / "out");
    config.input.path = dir / "nope.csv";
    EXPECT_THROW(run_pipeline(config), DataError);
}

TEST(Cli, StageSubcommandsComposeToRun) {
    TempDir dir;
    const auto out = dir / "out";
    write_file(dir / "cfg.json", R"({"input": {"path": ")" + kFixture.string() +
                                     R"("}, "output": {"report_dir": "out"}, "weighting": {"tf": "LOG"}})");
    const auto cfg = shell_quote(dir / "cfg.json");
    fs::create_directories(out);
    const auto terms = shell_quote(out / "prep.terms");
    const auto vocab = shell_quote(out / "vocab.tsv");
    ASSERT_EQ(run_command(cli("prep --config " + cfg + " --out " + terms)).exit_code, 0);
    ASSERT_EQ(run_command(cli("vocab --config " + cfg + " --in " + terms + " --out " + vocab)).exit_code, 0);
    for (const char* clf : {"nb", "dt", "svm"}) {
        const auto model = shell_quote(out / (std::string(clf) + ".model"));
        auto r = run_command(cli("train --config " + cfg + " --in " + terms + " --vocab " + vocab +
                                 " --classifier " + clf + " --out " + model));
        ASSERT_EQ(r.exit_code, 0) << r.output;
        r = run_command(cli("score --in " + terms + " --vocab " + vocab + " --model " + model + " --out " +
                            shell_quote(out / ("scores_" + std::string(clf) + ".csv"))));
        ASSERT_EQ(r.exit_code, 0) << r.output;
    }
    auto r = run_command(cli("report --config " + cfg + " --in " + shell_quote(out)));
    ASSERT_EQ(r.exit_code, 0) << r.output;

    std::map<std::string, std::string> staged;
    for (const auto& entry : fs::directory_iterator(out)) {
        staged[entry.path().filename().string()] = read_file(entry.path());
    }
    fs::remove_all(out);

    r = run_command(cli("run --config " + cfg));
    ASSERT_EQ(r.exit_code, 0) << r.output;
    for (const auto& [name, text] : staged) {
        ASSERT_TRUE(fs::exists(out / name)) << name;
        if (name == "report.json") {
            EXPECT_EQ(without_timings(read_file(out / name)).dump(), without_timings(text).dump());
        } else {
            EXPECT_EQ(read_file(out / name), text) << name;
        }
    }
}

TEST(Cli, ExitCodes) {
    TempDir dir;
    EXPECT_EQ(run_command(cli("")).exit_code, 1);
    EXPECT_EQ(run_command(cli("frobnicate")).exit_code, 1);
    EXPECT_EQ(run_command(cli("eval --from-counts 1,2,3")).exit_code, 1);
    EXPECT_EQ(run_command(cli("eval --from-counts 1,2,3,4 --positive MAYBE")).exit_code, 1);
    EXPECT_EQ(run_command(cli("eval --from-counts 1,0,0,0")).exit_code, 2);  // NEG truth absent
    EXPECT_EQ(run_command(cli("--help")).exit_code, 0);

    write_file(dir / "bad.json", R"({"colour": "blue"})");
    EXPECT_EQ(run_command(cli("run --config " + shell_quote(dir / "bad.json"))).exit_code, 1);
    write_file(dir / "missing.json", R"({"input": {"path": "nope.csv"}})");
    const auto r = run_command(cli("run --config " + shell_quote(dir / "missing.json")));
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.output.find("stage 'prep'"), std::string::npos) << r.output;

    write_file(dir / "old.terms", "#sentiment-terms v0\n");
    EXPECT_EQ(run_command(cli("vocab --in " + shell_quote(dir / "old.terms") + " --out " + shell_quote(dir / "v.tsv"))).exit_code, 2);
}

TEST(Cli, FromCountsJson) {
    const auto r = run_command(cli("eval --from-counts 291,27,273,9 --positive NEG --json"));
    ASSERT_EQ(r.exit_code, 0) << r.output;
    const Json j = Json::parse(r.output);
    EXPECT_DOUBLE_EQ(j["accuracy"].get<double>(), 0.94);
    EXPECT_DOUBLE_EQ(j["recall"].get<double>(), 0.97);
    EXPECT_EQ(j["confusion"]["positive_class"], "NEG");
}

TEST(Cli, ReportDirFromEnvironment) {
    TempDir dir;
    write_file(dir / "cfg.json", R"({"input": {"path": ")" + kFixture.string() + R"("}, "classifiers": {"enabled": ["nb"]}})");
    const auto r = run_command("SENTIMENT_REPORT_DIR=" + shell_quote(dir / "envout") + " " + cli("run --config " + shell_quote(dir / "cfg.json")));
    ASSERT_EQ(r.exit_code, 0) << r.output;
    EXPECT_TRUE(fs::exists(dir / "envout" / "report.json"));
    EXPECT_FALSE(fs::exists(dir / "report"));
}
