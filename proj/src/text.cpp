#include "subjectnet/text.hpp"

#include <cctype>
#include <charconv>

namespace subjectnet::text {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::string collapse_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : trim(s)) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      out.push_back(static_cast<char>(std::tolower(c)));
      continue;
    }
    // UTF-8 Latin-1 supplement: 0xC3 0x80..0x9E are uppercase letters whose
    // lowercase form is +0x20, except 0x97 (multiplication sign).
    if (c == 0xC3 && i + 1 < s.size()) {
      unsigned char d = static_cast<unsigned char>(s[i + 1]);
      if (d >= 0x80 && d <= 0x9E && d != 0x97) {
        out.push_back(static_cast<char>(0xC3));
        out.push_back(static_cast<char>(d + 0x20));
        ++i;
        continue;
      }
    }
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::string strip_diacritics(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c != 0xC3 || i + 1 >= s.size()) {
      out.push_back(static_cast<char>(c));
      continue;
    }
    unsigned char d = static_cast<unsigned char>(s[i + 1]);
    ++i;
    switch (d) {
      case 0xA0: case 0xA1: case 0xA2: case 0xA3: case 0xA4: case 0xA5:
        out.push_back('a'); break;
      case 0xA6: out += "ae"; break;
      case 0xA7: out.push_back('c'); break;
      case 0xA8: case 0xA9: case 0xAA: case 0xAB:
        out.push_back('e'); break;
      case 0xAC: case 0xAD: case 0xAE: case 0xAF:
        out.push_back('i'); break;
      case 0xB0: out.push_back('d'); break;
      case 0xB1: out.push_back('n'); break;
      case 0xB2: case 0xB3: case 0xB4: case 0xB5: case 0xB6: case 0xB8:
        out.push_back('o'); break;
      case 0xB9: case 0xBA: case 0xBB: case 0xBC:
        out.push_back('u'); break;
      case 0xBD: case 0xBF:
        out.push_back('y'); break;
      case 0x9F: out += "ss"; break;
      default:
        out.push_back(static_cast<char>(0xC3));
        out.push_back(static_cast<char>(d));
    }
  }
  return out;
}

std::string_view first_token(std::string_view s) {
  s = trim(s);
  std::size_t e = 0;
  while (e < s.size() && !is_space(s[e])) ++e;
  return s.substr(0, e);
}

std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    std::size_t pos = s.find(delim, begin);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(begin));
      return parts;
    }
    parts.emplace_back(s.substr(begin, pos - begin));
    begin = pos + 1;
  }
}

std::optional<long long> parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  long long value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace subjectnet::text
