#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sizebias::csv {

struct Record {
    std::size_t line = 0;  // 1-based line where the record starts
    std::vector<std::string> fields;
};

/// RFC 4180 reader: comma delimiter, double-quote quoting with "" escapes,
/// LF or CRLF line ends, leading UTF-8 BOM ignored. Blank lines are skipped.
/// Throws IngestError on an unterminated quoted field.
std::vector<Record> parse(std::string_view text, const std::string& source);

/// Quotes the field when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

/// Joins escaped fields with commas and appends '\n'.
std::string row(std::initializer_list<std::string_view> fields);

}  // namespace sizebias::csv
