#include <gtest/gtest.h>

#include "sentiment/errors.hpp"
#include "sentiment/stage_io.hpp"
#include "test_util.hpp"

using namespace sentiment;
using testutil::TempDir;

TEST(TermsFile, RoundTrip) {
    TempDir dir;
    PreparedCorpus c;
    c.train = {{0, {"good", "film"}, Polarity::Pos}, {3, {}, Polarity::Neg}, {4, {"çok", "iyi"}, Polarity::Pos}};
    c.test = {{1, {"bad"}, Polarity::Neg}, {2, {"x"}, Polarity::Pos}};
    write_terms(c, dir / "p.terms");
    EXPECT_EQ(read_terms(dir / "p.terms"), c);
    const auto text = testutil::read_file(dir / "p.terms");
    EXPECT_TRUE(text.starts_with("#sentiment-terms v1\n0\tPOS\ttrain\tgood film\n1\tNEG\ttest\tbad\n"));
}

TEST(TermsFile, VersionAndSchemaErrors) {
    TempDir dir;
    testutil::write_file(dir / "v2.terms", "#sentiment-terms v2\n");
    try {
        read_terms(dir / "v2.terms");
        FAIL();
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("version"), std::string::npos);
    }
    testutil::write_file(dir / "other.terms", "#sentiment-vocab v1 n_docs=3\n");
    EXPECT_THROW(read_terms(dir / "other.terms"), DataError);
    testutil::write_file(dir / "bad.terms", "#sentiment-terms v1\n0\tPOS\tvalidation\tx\n");
    EXPECT_THROW(read_terms(dir / "bad.terms"), DataError);
    EXPECT_THROW(read_terms(dir / "missing.terms"), DataError);
}

TEST(ScoresFile, RoundTripIsExact) {
    TempDir dir;
    ScoreTable t;
    t.kind = ClassifierKind::LinearSvm;
    t.rows = {{0, Polarity::Pos, SplitRole::Train, 0.1 + 0.2, Polarity::Pos},
              {1, Polarity::Neg, SplitRole::Test, -1e-300, Polarity::Neg},
              {2, Polarity::Pos, SplitRole::Test, 1.0 / 3.0, Polarity::Pos}};
    write_scores(t, dir / "s.csv");
    EXPECT_EQ(read_scores(dir / "s.csv"), t);
}

TEST(ScoresFile, HeaderChecks) {
    TempDir dir;
    testutil::write_file(dir / "a.csv", "#sentiment-scores v0 classifier=nb\nid,label,split,score,prediction\n");
    EXPECT_THROW(read_scores(dir / "a.csv"), DataError);
    testutil::write_file(dir / "b.csv", "#sentiment-scores v1 classifier=knn\nid,label,split,score,prediction\n");
    EXPECT_THROW(read_scores(dir / "b.csv"), DataError);
    testutil::write_file(dir / "c.csv", "#sentiment-scores v1 classifier=nb\nid,score\n");
    EXPECT_THROW(read_scores(dir / "c.csv"), DataError);
}
