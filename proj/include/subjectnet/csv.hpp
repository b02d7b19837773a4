#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subjectnet::csv {

// Streaming CSV reader. Fields are comma separated; a field starting with a
// double quote is parsed RFC-4180 style ("" escapes a quote, newlines are
// allowed inside). Completely blank lines are skipped. CRLF and a leading
// UTF-8 byte order mark are tolerated.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Next row, or nullopt at end of stream. Throws ValidationError on an
  // unterminated quoted field.
  std::optional<std::vector<std::string>> next();

  // 1-based line number where the last returned row started.
  std::size_t line() const { return row_line_; }

 private:
  std::istream& in_;
  std::size_t next_line_ = 1;
  std::size_t row_line_ = 0;
  bool bom_checked_ = false;
};

// Quotes a field iff it contains a comma, quote, or newline.
std::string quote_field(std::string_view field);

std::string join_row(const std::vector<std::string>& fields);

}  // namespace subjectnet::csv
