#include <gtest/gtest.h>

#include "sentiment/preprocess.hpp"
#include "sentiment/rng.hpp"
#include "test_util.hpp"

using namespace sentiment;

TEST(Tokenize, WhitespaceAndPunctuationBoundaries) {
    EXPECT_EQ(tokenize(""), Tokens{});
    EXPECT_EQ(tokenize("   \t\n"), Tokens{});
    EXPECT_EQ(tokenize("Great movie!!"), (Tokens{"Great", "movie", "!!"}));
    EXPECT_EQ(tokenize("it's good"), (Tokens{"it", "'", "s", "good"}));
    EXPECT_EQ(tokenize("(wow)"), (Tokens{"(", "wow", ")"}));
    EXPECT_EQ(tokenize("a-b-c"), (Tokens{"a", "-", "b", "-", "c"}));
}

TEST(Tokenize, UnicodeWhitespaceAndPunctuation) {
    // U+00A0 no-break space separates; U+201C/U+201D quotes are punctuation.
    EXPECT_EQ(tokenize("çok\xC2\xA0güzel"), (Tokens{"çok", "güzel"}));
    EXPECT_EQ(tokenize("\xE2\x80\x9Cnice\xE2\x80\x9D"),
              (Tokens{"\xE2\x80\x9C", "nice", "\xE2\x80\x9D"}));
}

TEST(Tokenize, SocialTokensStayWhole) {
    EXPECT_EQ(tokenize("#apple love @bestbuy it"), (Tokens{"#apple", "love", "@bestbuy", "it"}));
    EXPECT_EQ(tokenize("see https://t.co/x!"), (Tokens{"see", "https://t.co/x!"}));
    EXPECT_EQ(tokenize("price#tag"), (Tokens{"price", "#", "tag"}));
    EXPECT_EQ(tokenize("# alone"), (Tokens{"#", "alone"}));
}

TEST(ErasePunctuation, DropsAndStrips) {
    EXPECT_EQ(erase_punctuation({"movie", "!!"}), (Tokens{"movie"}));
    EXPECT_EQ(erase_punctuation({"don't"}), (Tokens{"dont"}));
    EXPECT_EQ(erase_punctuation({"a-b-c"}), (Tokens{"abc"}));
    // Symbols are not punctuation.
    EXPECT_EQ(erase_punctuation({"$5", "a+b"}), (Tokens{"$5", "a+b"}));
}

TEST(FilterNumbers, DigitOnlyTokensGo) {
    EXPECT_EQ(filter_numbers({"2", "fast", "2", "furious"}), (Tokens{"fast", "furious"}));
    EXPECT_EQ(filter_numbers({"mp3"}), (Tokens{"mp3"}));
    EXPECT_EQ(filter_numbers({}), Tokens{});
    EXPECT_EQ(filter_numbers({"\xD9\xA3"}), Tokens{});  // Arabic-Indic digit three
}

TEST(Lowercase, Unicode) {
    EXPECT_EQ(lowercase({"Great"}), (Tokens{"great"}));
    EXPECT_EQ(lowercase({"IMDB"}), (Tokens{"imdb"}));
    EXPECT_EQ(lowercase({"çok"}), (Tokens{"çok"}));
    EXPECT_EQ(lowercase({"ÇOK"}), (Tokens{"çok"}));
}

TEST(RemoveStopwords, EnglishList) {
    const auto& en = english_stopwords();
    EXPECT_EQ(remove_stopwords({"the", "movie", "is", "great"}, en), (Tokens{"movie", "great"}));
    EXPECT_EQ(remove_stopwords({"the", "movie"}, {}), (Tokens{"the", "movie"}));
    EXPECT_EQ(remove_stopwords({"a", "a", "a"}, en), Tokens{});
}

TEST(Stopwords, CompiledListMatchesDataFile) {
    EXPECT_EQ(english_stopwords(),
              load_stopwords(std::string(SENTIMENT_DATA_DIR) + "/stopwords_en.txt"));
    EXPECT_GT(english_stopwords().size(), 100u);
}

TEST(Stopwords, ParsesCommentsAndBlanks) {
    EXPECT_EQ(parse_stopwords("# header\n the \n\nand # trailing\r\n"), (StopwordList{"and", "the"}));
}

TEST(StripSocialTokens, PrefixAndUrlRules) {
    EXPECT_EQ(strip_social_tokens({"#apple", "love", "@bestbuy", "it"}), (Tokens{"love", "it"}));
    EXPECT_EQ(strip_social_tokens({"https://t.co/x", "wow"}), (Tokens{"wow"}));
    EXPECT_EQ(strip_social_tokens({"HTTP://A.B", "ftp://x"}), (Tokens{"ftp://x"}));
    EXPECT_EQ(strip_social_tokens({"price#tag"}), (Tokens{"price#tag"}));
}

TEST(PreprocessDocument, ComposesStagesInOrder) {
    PreprocessConfig cfg;  // all on, empty stopwords
    EXPECT_EQ(preprocess_document({0, "Running FAST!!", Polarity::Pos}, cfg).terms,
              (Tokens{"run", "fast"}));
    EXPECT_TRUE(preprocess_document({1, "", std::nullopt}, cfg).terms.empty());

    cfg.stopwords = english_stopwords();
    cfg.strip_social_tokens = true;
    EXPECT_EQ(preprocess_document({2, "The MOVIES were 10/10 #fun @bob https://x.y", std::nullopt}, cfg).terms,
              (Tokens{"movi"}));
}

TEST(PreprocessDocument, AllStagesOffIsRawTokens) {
    PreprocessConfig off{false, false, false, {}, false, false};
    const std::string text = "It's 2 GOOD!! #yes";
    EXPECT_EQ(preprocess_document({0, text, std::nullopt}, off).terms, tokenize(text));
}

TEST(PreprocessDocument, StopwordsMatchAfterLowercasing) {
    PreprocessConfig cfg;
    cfg.stem = false;
    cfg.stopwords = english_stopwords();
    EXPECT_EQ(preprocess_document({0, "THE Movie", std::nullopt}, cfg).terms, (Tokens{"movie"}));
}

namespace {

std::string random_text(SplitMix64& rng) {
    static const std::vector<std::string> pieces = {
        "Good", "bad", "it's", "!!", "?", "42", "mp3", "çok", "İyi", "#tag", "@who", "http://a.b/c",
        "don't", "...", "-", "\xE2\x80\x9C", "MOVIE", "The", "running", "\xC2\xA0", " ", "\t", "ß", "x"};
    std::string s;
    const auto n = rng.below(12);
    for (std::uint64_t i = 0; i < n; ++i) {
        s += pieces[rng.below(pieces.size())];
        if (rng.below(3) == 0) s += ' ';
    }
    return s;
}

bool has_punct_or_space(const std::string& term) {
    return tokenize(term) != Tokens{term} || erase_punctuation({term}) != Tokens{term};
}

}  // namespace

TEST(PreprocessProperties, StageIdempotenceAndTermShape) {
    SplitMix64 rng(11);
    PreprocessConfig cfg;
    cfg.stopwords = english_stopwords();
    for (int i = 0; i < 500; ++i) {
        const std::string text = random_text(rng);
        const Tokens toks = tokenize(text);
        EXPECT_EQ(lowercase(lowercase(toks)), lowercase(toks)) << text;
        EXPECT_EQ(erase_punctuation(erase_punctuation(toks)), erase_punctuation(toks)) << text;

        for (bool social : {false, true}) {
            cfg.strip_social_tokens = social;
            const auto doc = preprocess_document({0, text, std::nullopt}, cfg);
            for (const auto& t : doc.terms) {
                EXPECT_FALSE(t.empty()) << text;
                if (!social && (t.starts_with('#') || t.starts_with('@') || t.starts_with("http"))) continue;
                EXPECT_FALSE(has_punct_or_space(t)) << text << " -> " << t;
                EXPECT_EQ(lowercase({t}), Tokens{t}) << text;
            }
        }
    }
}
