#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "subjectnet/record.hpp"

namespace subjectnet {

inline constexpr std::string_view kCorpusHeader = "id,year,w,m,s1,s2,s3,s4,s5";

// Parses the tabular corpus encoding. The header row is mandatory and must
// match kCorpusHeader. Row-level problems throw ValidationError with the
// 1-based line number.
Corpus parse_corpus(std::istream& in, const SubjectRegistry& registry);

Corpus load_corpus(const std::filesystem::path& path, const SubjectRegistry& registry);

// Inverse of parse_corpus: header plus one row per record, LF line ends.
std::string serialize_corpus(const Corpus& corpus);

void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

}  // namespace subjectnet
