#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sentiment::csv {

using Record = std::vector<std::string>;

/// RFC 4180 record reader. Handles quoted fields with embedded commas,
/// doubled quotes and line breaks; accepts both LF and CRLF terminators.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    /// Next record, or nullopt at end of input. Throws DataError on an
    /// unterminated quoted field.
    std::optional<Record> next();

    /// 1-based line number where the most recently returned record started.
    std::size_t record_line() const noexcept { return record_line_; }

private:
    std::istream& in_;
    std::size_t line_ = 1;
    std::size_t record_line_ = 0;
};

/// Quotes a field only when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

void write_record(std::ostream& out, const Record& fields);

}  // namespace sentiment::csv
