#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pscore::csv {

struct Row {
  std::size_t line = 0;  // physical line where the row starts
  std::vector<std::string> fields;
};

/// RFC-4180 reader: quoted fields may contain commas, doubled quotes and
/// line breaks. Accepts LF or CRLF. Blank lines are skipped.
std::vector<Row> read_all(std::istream& in);

/// Quotes a field when it holds a delimiter, quote, line break or
/// leading/trailing space.
std::string quote(std::string_view field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace pscore::csv
