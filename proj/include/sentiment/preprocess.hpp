#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sentiment/corpus.hpp"

namespace sentiment {

using Tokens = std::vector<std::string>;
using StopwordList = std::set<std::string, std::less<>>;

struct ProcessedDocument {
    std::uint64_t id = 0;
    Tokens terms;
    std::optional<Polarity> label;

    friend bool operator==(const ProcessedDocument&, const ProcessedDocument&) = default;
};

struct PreprocessConfig {
    bool erase_punctuation = true;
    bool filter_numbers = true;
    bool lowercase = true;
    StopwordList stopwords;
    bool stem = true;
    bool strip_social_tokens = false;
};

/// Splits UTF-8 text at Unicode whitespace, then splits each chunk at
/// boundaries between punctuation (general category P*) and other
/// characters: "it's" -> ["it", "'", "s"].
///
/// Chunks that look like social tokens are kept whole so that
/// strip_social_tokens can see them: a leading '#' or '@' followed by at
/// least one more character, or an "http://" / "https://" prefix.
Tokens tokenize(std::string_view text);

/// Removes every punctuation code point; tokens left empty are dropped.
Tokens erase_punctuation(const Tokens& tokens);

/// Drops tokens made only of decimal digits. Mixed tokens such as "mp3" stay.
Tokens filter_numbers(const Tokens& tokens);

/// Full Unicode lowercase mapping (root locale).
Tokens lowercase(const Tokens& tokens);

Tokens remove_stopwords(const Tokens& tokens, const StopwordList& stopwords);

/// Drops hashtags, mentions and http(s) URLs.
Tokens strip_social_tokens(const Tokens& tokens);

/// tokenize -> strip_social_tokens -> erase_punctuation -> filter_numbers
/// -> lowercase -> remove_stopwords -> stem, skipping disabled stages.
/// Stopword removal is skipped when the list is empty.
ProcessedDocument preprocess_document(const Document& doc, const PreprocessConfig& config);

/// Parses a stopword file: one word per line, '#' starts a comment,
/// blank lines ignored, surrounding whitespace trimmed.
StopwordList parse_stopwords(std::string_view text);
StopwordList load_stopwords(const std::filesystem::path& path);

/// The English list shipped in data/stopwords_en.txt, compiled in.
const StopwordList& english_stopwords();

}  // namespace sentiment
