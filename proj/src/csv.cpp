#include "sentiment/csv.hpp"

#include "sentiment/errors.hpp"

namespace sentiment::csv {

std::optional<Record> Reader::next() {
    int c = in_.get();
    if (c == std::char_traits<char>::eof()) return std::nullopt;

    record_line_ = line_;
    Record record;
    std::string field;
    bool quoted = false;
    bool field_was_quoted = false;

    for (;; c = in_.get()) {
        if (c == std::char_traits<char>::eof()) {
            if (quoted) {
                throw DataError("unterminated quoted field starting on line " +
                                std::to_string(record_line_));
            }
            break;
        }
        const char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                if (in_.peek() == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n') ++line_;
                field.push_back(ch);
            }
            continue;
        }
        if (ch == '"' && field.empty() && !field_was_quoted) {
            quoted = true;
            field_was_quoted = true;
        } else if (ch == ',') {
            record.push_back(std::move(field));
            field.clear();
            field_was_quoted = false;
        } else if (ch == '\n') {
            ++line_;
            break;
        } else if (ch == '\r') {
            if (in_.peek() == '\n') in_.get();
            ++line_;
            break;
        } else {
            field.push_back(ch);
        }
    }
    record.push_back(std::move(field));
    return record;
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

void write_record(std::ostream& out, const Record& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << escape(fields[i]);
    }
    out << '\n';
}

}  // namespace sentiment::csv
