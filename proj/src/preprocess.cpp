#include "sentiment/preprocess.hpp"

#include <fstream>
#include <sstream>

#include <unicode/locid.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "sentiment/errors.hpp"
#include "sentiment/stemmer.hpp"

namespace sentiment {

namespace {

// Decodes one code point starting at `pos`; malformed bytes decode to
// U+FFFD (a symbol, so they never count as punctuation or whitespace).
UChar32 next_code_point(std::string_view s, std::size_t& pos) {
    UChar32 c;
    auto i = static_cast<int32_t>(pos);
    U8_NEXT(reinterpret_cast<const uint8_t*>(s.data()), i, static_cast<int32_t>(s.size()), c);
    pos = static_cast<std::size_t>(i);
    return c < 0 ? 0xFFFD : c;
}

bool is_punct(UChar32 c) { return u_ispunct(c) != 0; }

bool is_space(UChar32 c) { return u_isUWhiteSpace(c) != 0; }

bool starts_with_url_scheme(std::string_view s) {
    auto prefixed = [s](std::string_view scheme) {
        if (s.size() < scheme.size()) return false;
        for (std::size_t i = 0; i < scheme.size(); ++i) {
            const char c = s[i];
            const char lower = (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
            if (lower != scheme[i]) return false;
        }
        return true;
    };
    return prefixed("http://") || prefixed("https://");
}

bool is_social_token(std::string_view token) {
    if (token.size() >= 2 && (token.front() == '#' || token.front() == '@')) return true;
    return starts_with_url_scheme(token);
}

void split_at_punctuation(std::string_view chunk, Tokens& out) {
    std::size_t pos = 0;
    std::size_t start = 0;
    int current = -1;  // -1 unset, 0 word chars, 1 punctuation
    while (pos < chunk.size()) {
        const std::size_t at = pos;
        const int cls = is_punct(next_code_point(chunk, pos)) ? 1 : 0;
        if (current != -1 && cls != current) {
            out.emplace_back(chunk.substr(start, at - start));
            start = at;
        }
        current = cls;
    }
    if (start < chunk.size()) out.emplace_back(chunk.substr(start));
}

}  // namespace

Tokens tokenize(std::string_view text) {
    Tokens tokens;
    std::size_t pos = 0;
    std::size_t chunk_start = std::string_view::npos;
    auto flush = [&](std::size_t end) {
        if (chunk_start == std::string_view::npos) return;
        const auto chunk = text.substr(chunk_start, end - chunk_start);
        if (is_social_token(chunk)) {
            tokens.emplace_back(chunk);
        } else {
            split_at_punctuation(chunk, tokens);
        }
        chunk_start = std::string_view::npos;
    };
    while (pos < text.size()) {
        const std::size_t at = pos;
        if (is_space(next_code_point(text, pos))) {
            flush(at);
        } else if (chunk_start == std::string_view::npos) {
            chunk_start = at;
        }
    }
    flush(text.size());
    return tokens;
}

Tokens erase_punctuation(const Tokens& tokens) {
    Tokens out;
    out.reserve(tokens.size());
    for (const auto& tok : tokens) {
        std::string kept;
        kept.reserve(tok.size());
        std::size_t pos = 0;
        while (pos < tok.size()) {
            const std::size_t at = pos;
            if (!is_punct(next_code_point(tok, pos))) kept.append(tok, at, pos - at);
        }
        if (!kept.empty()) out.push_back(std::move(kept));
    }
    return out;
}

Tokens filter_numbers(const Tokens& tokens) {
    Tokens out;
    out.reserve(tokens.size());
    for (const auto& tok : tokens) {
        bool all_digits = !tok.empty();
        std::size_t pos = 0;
        while (all_digits && pos < tok.size()) {
            all_digits = u_isdigit(next_code_point(tok, pos)) != 0;
        }
        if (!all_digits) out.push_back(tok);
    }
    return out;
}

Tokens lowercase(const Tokens& tokens) {
    Tokens out;
    out.reserve(tokens.size());
    for (const auto& tok : tokens) {
        std::string lowered;
        icu::UnicodeString::fromUTF8(tok).toLower(icu::Locale::getRoot()).toUTF8String(lowered);
        out.push_back(std::move(lowered));
    }
    return out;
}

Tokens remove_stopwords(const Tokens& tokens, const StopwordList& stopwords) {
    Tokens out;
    out.reserve(tokens.size());
    for (const auto& tok : tokens) {
        if (!stopwords.contains(tok)) out.push_back(tok);
    }
    return out;
}

Tokens strip_social_tokens(const Tokens& tokens) {
    Tokens out;
    out.reserve(tokens.size());
    for (const auto& tok : tokens) {
        const bool social = (!tok.empty() && (tok.front() == '#' || tok.front() == '@')) ||
                            starts_with_url_scheme(tok);
        if (!social) out.push_back(tok);
    }
    return out;
}

ProcessedDocument preprocess_document(const Document& doc, const PreprocessConfig& config) {
    Tokens terms = tokenize(doc.text);
    if (config.strip_social_tokens) terms = strip_social_tokens(terms);
    if (config.erase_punctuation) terms = erase_punctuation(terms);
    if (config.filter_numbers) terms = filter_numbers(terms);
    if (config.lowercase) terms = lowercase(terms);
    if (!config.stopwords.empty()) terms = remove_stopwords(terms, config.stopwords);
    if (config.stem) {
        for (auto& t : terms) t = stem(t);
    }
    return ProcessedDocument{doc.id, std::move(terms), doc.label};
}

StopwordList parse_stopwords(std::string_view text) {
    StopwordList words;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r\n");
        words.insert(line.substr(first, last - first + 1));
    }
    return words;
}

StopwordList load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open stopword file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_stopwords(buf.str());
}

}  // namespace sentiment
