#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subjectnet::text {

std::string_view trim(std::string_view s);

// Trim plus collapse of internal whitespace runs to a single space.
std::string collapse_spaces(std::string_view s);

// Lowercases ASCII letters and the Latin-1 supplement range as encoded in
// UTF-8 (covers Portuguese names). Other bytes pass through unchanged.
std::string fold_case(std::string_view s);

// Replaces accented Latin-1 letters by their base letter on already
// case-folded text ("joão" -> "joao"). ß -> ss, æ -> ae, œ -> oe.
std::string strip_diacritics(std::string_view s);

std::string_view first_token(std::string_view s);

std::vector<std::string> split(std::string_view s, char delim);

// Whole-field integer parse; nullopt on anything but an optionally signed
// decimal number.
std::optional<long long> parse_int(std::string_view s);

}  // namespace subjectnet::text
