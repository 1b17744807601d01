#include "sentiment/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "sentiment/csv.hpp"
#include "sentiment/errors.hpp"
#include "sentiment/rng.hpp"

namespace sentiment {

std::size_t LabeledCorpus::count(Polarity p) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        documents.begin(), documents.end(), [p](const Document& d) { return d.label == p; }));
}

namespace {

std::size_t column_index(const csv::Record& header, const std::string& name,
                         const std::filesystem::path& path) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::string_view h = header[i];
        // Tolerate a UTF-8 byte order mark on the first header cell.
        if (i == 0 && h.starts_with("\xEF\xBB\xBF")) h.remove_prefix(3);
        if (h == name) return i;
    }
    throw DataError(path.string() + ": header has no column '" + name + "'");
}

}  // namespace

LabeledCorpus load_csv(const std::filesystem::path& path, const std::string& text_column,
                       const std::string& label_column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file " + path.string());

    csv::Reader reader(in);
    const auto header = reader.next();
    if (!header) throw DataError(path.string() + ": empty file (header row required)");
    const std::size_t text_idx = column_index(*header, text_column, path);
    const std::size_t label_idx = column_index(*header, label_column, path);
    const std::size_t needed = std::max(text_idx, label_idx) + 1;

    LabeledCorpus corpus;
    std::uint64_t next_id = 0;
    while (auto record = reader.next()) {
        // A bare line break (e.g. trailing newline artifacts) is not a row.
        if (record->size() == 1 && record->front().empty()) continue;
        if (record->size() < needed) {
            throw DataError(path.string() + ": line " + std::to_string(reader.record_line()) +
                            ": expected at least " + std::to_string(needed) + " fields, got " +
                            std::to_string(record->size()));
        }
        const std::string& raw_label = (*record)[label_idx];
        const auto label = parse_polarity(raw_label);
        if (!label) {
            throw DataError(path.string() + ": line " + std::to_string(reader.record_line()) +
                            ": unparseable label '" + raw_label + "' (expected POS or NEG)");
        }
        corpus.documents.push_back(Document{next_id++, std::move((*record)[text_idx]), *label});
    }
    return corpus;
}

void write_csv(const LabeledCorpus& corpus, const std::filesystem::path& path,
               const std::string& text_column, const std::string& label_column) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    csv::write_record(out, {text_column, label_column});
    for (const auto& doc : corpus.documents) {
        if (!doc.label) throw DataError("document " + std::to_string(doc.id) + " has no label");
        csv::write_record(out, {doc.text, std::string(to_string(*doc.label))});
    }
}

Split stratified_split(const LabeledCorpus& corpus, const SplitSpec& spec) {
    if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0)) {
        throw UsageError("test_fraction must lie in (0,1), got " +
                         std::to_string(spec.test_fraction));
    }

    std::vector<const Document*> sorted;
    sorted.reserve(corpus.size());
    for (const auto& d : corpus.documents) {
        if (!d.label) throw DataError("document " + std::to_string(d.id) + " has no label");
        sorted.push_back(&d);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const Document* a, const Document* b) { return a->id < b->id; });

    SplitMix64 rng(spec.seed);
    std::vector<std::uint64_t> test_ids;
    for (Polarity cls : kPolarities) {
        std::vector<std::uint64_t> ids;
        for (const Document* d : sorted) {
            if (d->label == cls) ids.push_back(d->id);
        }
        if (ids.size() < 2) {
            throw DataError("class " + std::string(to_string(cls)) + " has " +
                            std::to_string(ids.size()) + " document(s); need at least 2 to split");
        }
        shuffle(std::span<std::uint64_t>(ids), rng);
        const auto n_test = static_cast<std::size_t>(
            std::llround(static_cast<double>(ids.size()) * spec.test_fraction));
        test_ids.insert(test_ids.end(), ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(n_test));
    }
    std::sort(test_ids.begin(), test_ids.end());

    Split split;
    for (const Document* d : sorted) {
        auto& side = std::binary_search(test_ids.begin(), test_ids.end(), d->id) ? split.test
                                                                                 : split.train;
        side.documents.push_back(*d);
    }
    return split;
}

}  // namespace sentiment
