#include "sentiment/stage_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sentiment/csv.hpp"
#include "sentiment/errors.hpp"

namespace sentiment {

namespace {

constexpr std::string_view kTermsHeader = "#sentiment-terms v1";
constexpr std::string_view kScoresHeader = "#sentiment-scores v1";

std::vector<std::string_view> split_on(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto at = s.find(sep, start);
        if (at == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, at - start));
        start = at + 1;
    }
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

std::optional<SplitRole> parse_role(std::string_view s) {
    if (s == "train") return SplitRole::Train;
    if (s == "test") return SplitRole::Test;
    return std::nullopt;
}

// Reads the first line and checks the format tag, reporting the version
// found when it does not match.
std::string expect_header(std::istream& in, std::string_view header,
                          const std::filesystem::path& path) {
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tag = header.substr(0, header.find(' '));
    if (!line.starts_with(tag)) {
        throw DataError(path.string() + ": not a " + std::string(tag.substr(1)) + " file");
    }
    if (line != header && !line.starts_with(std::string(header) + " ")) {
        throw DataError(path.string() + ": format version mismatch (found '" + line +
                        "', expected '" + std::string(header) + "')");
    }
    return line;
}

}  // namespace

std::string_view to_string(SplitRole r) noexcept { return r == SplitRole::Train ? "train" : "test"; }

void write_terms(const PreparedCorpus& corpus, const std::filesystem::path& path) {
    std::vector<std::pair<const ProcessedDocument*, SplitRole>> docs;
    for (const auto& d : corpus.train) docs.emplace_back(&d, SplitRole::Train);
    for (const auto& d : corpus.test) docs.emplace_back(&d, SplitRole::Test);
    std::stable_sort(docs.begin(), docs.end(),
                     [](const auto& a, const auto& b) { return a.first->id < b.first->id; });

    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << kTermsHeader << '\n';
    for (const auto& [doc, role] : docs) {
        if (!doc->label) throw DataError("write_terms: document " + std::to_string(doc->id) + " has no label");
        out << doc->id << '\t' << to_string(*doc->label) << '\t' << to_string(role) << '\t';
        for (std::size_t i = 0; i < doc->terms.size(); ++i) {
            if (i) out << ' ';
            out << doc->terms[i];
        }
        out << '\n';
    }
    if (!out) throw DataError("error writing " + path.string());
}

PreparedCorpus read_terms(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open terms file " + path.string());
    expect_header(in, kTermsHeader, path);

    PreparedCorpus corpus;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fail = [&](const std::string& what) {
            throw DataError(path.string() + ": line " + std::to_string(line_no) + ": " + what);
        };
        const auto fields = split_on(line, '\t');
        if (fields.size() != 4) fail("expected id<TAB>label<TAB>split<TAB>terms");
        ProcessedDocument doc;
        if (!parse_number(fields[0], doc.id)) fail("bad id '" + std::string(fields[0]) + "'");
        doc.label = parse_polarity(fields[1]);
        if (!doc.label) fail("bad label '" + std::string(fields[1]) + "'");
        const auto role = parse_role(fields[2]);
        if (!role) fail("bad split '" + std::string(fields[2]) + "'");
        if (!fields[3].empty()) {
            for (auto t : split_on(fields[3], ' ')) doc.terms.emplace_back(t);
        }
        (*role == SplitRole::Train ? corpus.train : corpus.test).push_back(std::move(doc));
    }
    return corpus;
}

void write_scores(const ScoreTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << kScoresHeader << " classifier=" << to_string(table.kind) << '\n';
    out << "id,label,split,score,prediction\n";
    char buf[64];
    for (const auto& r : table.rows) {
        const auto res = std::to_chars(buf, buf + sizeof buf, r.score);
        out << r.id << ',' << to_string(r.label) << ',' << to_string(r.split) << ','
            << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << ','
            << to_string(r.prediction) << '\n';
    }
    if (!out) throw DataError("error writing " + path.string());
}

ScoreTable read_scores(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open scores file " + path.string());
    const auto header = expect_header(in, kScoresHeader, path);

    ScoreTable table;
    const std::string key = std::string(kScoresHeader) + " classifier=";
    const auto kind = header.starts_with(key) ? parse_classifier_kind(header.substr(key.size()))
                                              : std::nullopt;
    if (!kind) throw DataError(path.string() + ": header does not name a classifier");
    table.kind = *kind;

    csv::Reader reader(in);
    const auto columns = reader.next();
    if (!columns || *columns != csv::Record{"id", "label", "split", "score", "prediction"}) {
        throw DataError(path.string() + ": expected columns id,label,split,score,prediction");
    }
    while (auto rec = reader.next()) {
        const auto line_no = reader.record_line() + 1;  // +1 for the format header
        const auto fail = [&](const std::string& what) {
            throw DataError(path.string() + ": line " + std::to_string(line_no) + ": " + what);
        };
        if (rec->size() == 1 && rec->front().empty()) continue;
        if (rec->size() != 5) fail("expected 5 fields");
        ScoreRow row;
        if (!parse_number((*rec)[0], row.id)) fail("bad id");
        const auto label = parse_polarity((*rec)[1]);
        const auto role = parse_role((*rec)[2]);
        const auto pred = parse_polarity((*rec)[4]);
        if (!label || !role || !pred) fail("bad label, split or prediction");
        if (!parse_number((*rec)[3], row.score)) fail("bad score '" + (*rec)[3] + "'");
        row.label = *label;
        row.split = *role;
        row.prediction = *pred;
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace sentiment
