#include "sentiment/stemmer.hpp"

#include <algorithm>
#include <array>
#include <utility>

// Snowball English stemmer, following the current english.sbl rule set.
// Positions are byte offsets into an ASCII word; "R1"/"R2" are the usual
// Snowball regions, stored as the offset where each region starts.

namespace sentiment {

namespace {

constexpr bool is_vowel(char c) noexcept {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

// Vowels plus w, x and Y: letters that cannot close a short syllable.
constexpr bool is_vowel_wxy(char c) noexcept {
    return is_vowel(c) || c == 'w' || c == 'x' || c == 'Y';
}

constexpr bool is_valid_li(char c) noexcept {
    switch (c) {
    case 'c': case 'd': case 'e': case 'g': case 'h':
    case 'k': case 'm': case 'n': case 'r': case 't':
        return true;
    default:
        return false;
    }
}

bool ends_with(std::string_view w, std::string_view suffix) noexcept {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

bool has_vowel(std::string_view w, std::size_t end) noexcept {
    return std::any_of(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(end), is_vowel);
}

struct Rule {
    std::string_view suffix;
    int action;
};

// Longest rule whose suffix ends the word, or nullptr.
template <std::size_t N>
const Rule* longest_suffix(std::string_view w, const std::array<Rule, N>& rules) noexcept {
    const Rule* best = nullptr;
    for (const Rule& r : rules) {
        if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size())) best = &r;
    }
    return best;
}

class Stemmer {
public:
    explicit Stemmer(std::string word) : w_(std::move(word)) {}

    std::string run() && {
        prelude();
        mark_regions();
        step_1a();
        step_1b();
        step_1c();
        step_2();
        step_3();
        step_4();
        step_5();
        if (y_found_) std::replace(w_.begin(), w_.end(), 'Y', 'y');
        return std::move(w_);
    }

private:
    std::string w_;
    std::size_t p1_ = 0;
    std::size_t p2_ = 0;
    bool y_found_ = false;

    std::size_t suffix_start(std::string_view suffix) const noexcept {
        return w_.size() - suffix.size();
    }

    void replace_suffix(std::size_t suffix_len, std::string_view with) {
        w_.replace(w_.size() - suffix_len, suffix_len, with);
    }

    void prelude() {
        if (!w_.empty() && w_.front() == '\'') w_.erase(0, 1);
        if (!w_.empty() && w_.front() == 'y') {
            w_.front() = 'Y';
            y_found_ = true;
        }
        for (std::size_t i = 1; i < w_.size(); ++i) {
            if (w_[i] == 'y' && is_vowel(w_[i - 1])) {
                w_[i] = 'Y';
                y_found_ = true;
            }
        }
    }

    // Offset just past the first non-vowel that follows a vowel, scanning
    // from `from`; the word length when there is none.
    std::size_t region_after(std::size_t from) const noexcept {
        std::size_t i = from;
        while (i < w_.size() && !is_vowel(w_[i])) ++i;
        while (i < w_.size() && is_vowel(w_[i])) ++i;
        return i < w_.size() ? i + 1 : w_.size();
    }

    void mark_regions() {
        static constexpr std::array<std::string_view, 9> kPrefixes = {
            "arsen", "commun", "emerg", "gener", "inter", "later", "organ", "past", "univers"};
        p1_ = w_.size();
        for (std::string_view prefix : kPrefixes) {
            if (std::string_view(w_).starts_with(prefix)) {
                p1_ = prefix.size();
                break;
            }
        }
        if (p1_ == w_.size()) p1_ = region_after(0);
        p2_ = region_after(p1_);
    }

    // Short syllable ending at `end`: non-vowel (not w/x/Y), vowel,
    // non-vowel; or vowel, non-vowel at the very start; or "past".
    bool short_syllable_before(std::size_t end) const noexcept {
        if (end >= 3 && !is_vowel_wxy(w_[end - 1]) && is_vowel(w_[end - 2]) &&
            !is_vowel(w_[end - 3])) {
            return true;
        }
        if (end == 2 && !is_vowel(w_[1]) && is_vowel(w_[0])) return true;
        return end >= 4 && std::string_view(w_).substr(end - 4, 4) == "past";
    }

    void step_1a() {
        for (std::string_view s : {"'s'", "'s", "'"}) {
            if (ends_with(w_, s)) {
                w_.resize(w_.size() - s.size());
                break;
            }
        }

        static constexpr std::array<Rule, 6> kRules = {{
            {"sses", 1}, {"ied", 2}, {"ies", 2}, {"s", 3}, {"ss", 0}, {"us", 0},
        }};
        const Rule* r = longest_suffix(w_, kRules);
        if (!r) return;
        switch (r->action) {
        case 1:
            replace_suffix(4, "ss");
            break;
        case 2:
            replace_suffix(3, suffix_start(r->suffix) >= 2 ? "i" : "ie");
            break;
        case 3:
            // Delete if a vowel occurs before the letter preceding the s.
            if (w_.size() >= 3 && has_vowel(w_, w_.size() - 2)) w_.pop_back();
            break;
        default:
            break;
        }
    }

    void step_1b() {
        static constexpr std::array<Rule, 6> kRules = {{
            {"eed", 1}, {"eedly", 1}, {"ed", 2}, {"edly", 2}, {"ingly", 2}, {"ing", 3},
        }};
        const Rule* r = longest_suffix(w_, kRules);
        if (!r) return;
        const std::size_t start = suffix_start(r->suffix);
        const std::string_view stem_part = std::string_view(w_).substr(0, start);

        if (r->action == 1) {
            if (start < p1_) return;
            if (stem_part == "succ" || stem_part == "proc" || stem_part == "exc") return;
            replace_suffix(r->suffix.size(), "ee");
            return;
        }

        if (r->action == 3) {
            static constexpr std::array<Rule, 7> kIngStems = {{
                {"even", 2}, {"cann", 2}, {"inn", 2}, {"earr", 2},
                {"herr", 2}, {"out", 2}, {"y", 1},
            }};
            if (const Rule* s = longest_suffix(stem_part, kIngStems)) {
                if (s->action == 1) {
                    // dying -> die, lying -> lie
                    if (stem_part.size() == 2 && !is_vowel(stem_part[0])) {
                        w_ = std::string(1, stem_part[0]) + "ie";
                        return;
                    }
                } else if (stem_part.size() == s->suffix.size()) {
                    // inning, outing, evening: left alone
                    return;
                }
            }
        }

        if (!has_vowel(w_, start)) return;
        w_.resize(start);

        static constexpr std::array<Rule, 12> kEndings = {{
            {"at", 1}, {"bl", 1}, {"iz", 1},
            {"bb", 2}, {"dd", 2}, {"ff", 2}, {"gg", 2}, {"mm", 2},
            {"nn", 2}, {"pp", 2}, {"rr", 2}, {"tt", 2},
        }};
        const Rule* e = longest_suffix(w_, kEndings);
        if (e && e->action == 1) {
            w_.push_back('e');
        } else if (e && e->action == 2) {
            // "add", "err", "off" keep their double letter.
            const bool aeo_start = w_.size() == 3 &&
                                   (w_[0] == 'a' || w_[0] == 'e' || w_[0] == 'o');
            if (!aeo_start) w_.pop_back();
        } else if (w_.size() == p1_ && short_syllable_before(w_.size())) {
            w_.push_back('e');
        }
    }

    void step_1c() {
        const std::size_t n = w_.size();
        if (n >= 3 && (w_[n - 1] == 'y' || w_[n - 1] == 'Y') && !is_vowel(w_[n - 2])) {
            w_[n - 1] = 'i';
        }
    }

    void step_2() {
        enum : int { kDeleteLi = 100, kLogi = 101 };
        static constexpr std::array<Rule, 25> kRules = {{
            {"tional", 1},  {"enci", 2},     {"anci", 3},    {"abli", 4},     {"entli", 5},
            {"izer", 6},    {"ization", 6},  {"ational", 7}, {"ation", 7},    {"ator", 7},
            {"alism", 8},   {"aliti", 8},    {"alli", 8},    {"fulness", 9},  {"fulli", 9},
            {"ousli", 10},  {"ousness", 10}, {"iveness", 11}, {"iviti", 11},  {"biliti", 12},
            {"bli", 12},    {"ogist", 13},   {"ogi", kLogi}, {"lessli", 15},  {"li", kDeleteLi},
        }};
        static constexpr std::array<std::string_view, 16> kReplacement = {
            "", "tion", "ence", "ance", "able", "ent", "ize", "ate",
            "al", "ful", "ous", "ive", "ble", "og", "", "less"};

        const Rule* r = longest_suffix(w_, kRules);
        if (!r) return;
        const std::size_t start = suffix_start(r->suffix);
        if (start < p1_) return;
        if (r->action == kLogi) {
            if (start >= 1 && w_[start - 1] == 'l') replace_suffix(3, "og");
        } else if (r->action == kDeleteLi) {
            if (start >= 1 && is_valid_li(w_[start - 1])) w_.resize(start);
        } else {
            replace_suffix(r->suffix.size(), kReplacement[static_cast<std::size_t>(r->action)]);
        }
    }

    void step_3() {
        static constexpr std::array<Rule, 9> kRules = {{
            {"tional", 1}, {"ational", 2}, {"alize", 3}, {"icate", 4}, {"iciti", 4},
            {"ical", 4},   {"ful", 5},     {"ness", 5},  {"ative", 6},
        }};
        static constexpr std::array<std::string_view, 6> kReplacement = {
            "", "tion", "ate", "al", "ic", ""};

        const Rule* r = longest_suffix(w_, kRules);
        if (!r) return;
        const std::size_t start = suffix_start(r->suffix);
        if (start < p1_) return;
        if (r->action == 6) {
            if (start >= p2_) w_.resize(start);
            return;
        }
        replace_suffix(r->suffix.size(), kReplacement[static_cast<std::size_t>(r->action)]);
    }

    void step_4() {
        static constexpr std::array<Rule, 18> kRules = {{
            {"al", 1},  {"ance", 1}, {"ence", 1}, {"er", 1},  {"ic", 1},   {"able", 1},
            {"ible", 1}, {"ant", 1}, {"ement", 1}, {"ment", 1}, {"ent", 1}, {"ism", 1},
            {"ate", 1}, {"iti", 1},  {"ous", 1},  {"ive", 1}, {"ize", 1},  {"ion", 2},
        }};
        const Rule* r = longest_suffix(w_, kRules);
        if (!r) return;
        const std::size_t start = suffix_start(r->suffix);
        if (start < p2_) return;
        if (r->action == 2 && !(start >= 1 && (w_[start - 1] == 's' || w_[start - 1] == 't'))) {
            return;
        }
        w_.resize(start);
    }

    void step_5() {
        if (w_.empty()) return;
        const std::size_t last = w_.size() - 1;
        if (w_[last] == 'e') {
            if (last >= p2_ || (last >= p1_ && !short_syllable_before(last))) w_.pop_back();
        } else if (w_[last] == 'l') {
            if (last >= p2_ && last >= 1 && w_[last - 1] == 'l') w_.pop_back();
        }
    }
};

// Whole-word exceptions; words mapping to themselves are invariant.
std::string_view exception_form(std::string_view w) noexcept {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 15> kExceptions = {{
        {"andes", "andes"}, {"atlas", "atlas"},   {"bias", "bias"},   {"cosmos", "cosmos"},
        {"early", "earli"}, {"gently", "gentl"},  {"howe", "howe"},   {"idly", "idl"},
        {"news", "news"},   {"only", "onli"},     {"singly", "singl"}, {"skies", "sky"},
        {"skis", "ski"},    {"sky", "sky"},       {"ugly", "ugli"},
    }};
    for (const auto& [word, form] : kExceptions) {
        if (w == word) return form;
    }
    return {};
}

}  // namespace

std::string stem(std::string_view word) {
    if (std::any_of(word.begin(), word.end(),
                    [](char c) { return static_cast<unsigned char>(c) >= 0x80; })) {
        return std::string(word);
    }
    if (const auto form = exception_form(word); !form.empty()) return std::string(form);
    if (word.size() < 3) return std::string(word);
    return Stemmer(std::string(word)).run();
}

}  // namespace sentiment
