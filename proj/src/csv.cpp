#include "subjectnet/csv.hpp"

#include <istream>

#include "subjectnet/errors.hpp"

namespace subjectnet::csv {

std::optional<std::vector<std::string>> Reader::next() {
  if (!bom_checked_) {
    bom_checked_ = true;
    // Strip a UTF-8 byte order mark so the header row compares clean.
    if (in_.peek() == 0xEF) {
      char bom[3];
      in_.read(bom, 3);
      if (in_.gcount() != 3 || bom[1] != '\xBB' || bom[2] != '\xBF') {
        throw ValidationError("line 1: stray 0xEF byte at start of input");
      }
    }
  }
  while (true) {
    if (in_.peek() == std::char_traits<char>::eof()) return std::nullopt;

    row_line_ = next_line_;
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool row_done = false;

    int ci;
    while (!row_done && (ci = in_.get()) != std::char_traits<char>::eof()) {
      char c = static_cast<char>(ci);
      if (quoted) {
        if (c == '"') {
          if (in_.peek() == '"') {
            field.push_back('"');
            in_.get();
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++next_line_;
          field.push_back(c);
        }
        continue;
      }
      switch (c) {
        case '"':
          if (field.empty()) {
            quoted = true;
          } else {
            field.push_back(c);
          }
          break;
        case ',':
          fields.push_back(std::move(field));
          field.clear();
          break;
        case '\r':
          if (in_.peek() == '\n') break;  // swallowed with the upcoming LF
          [[fallthrough]];
        case '\n':
          ++next_line_;
          row_done = true;
          break;
        default:
          field.push_back(c);
      }
    }
    if (quoted) {
      throw ValidationError("line " + std::to_string(row_line_) +
                            ": unterminated quoted field");
    }
    fields.push_back(std::move(field));
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    return fields;
  }
}

std::string quote_field(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += quote_field(fields[i]);
  }
  return out;
}

}  // namespace subjectnet::csv
