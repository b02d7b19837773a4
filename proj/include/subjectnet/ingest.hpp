#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "subjectnet/gender.hpp"
#include "subjectnet/record.hpp"

namespace subjectnet {

struct RejectedRecord {
  std::string id;
  std::size_t line = 0;
  std::string reason;

  friend bool operator==(const RejectedRecord&, const RejectedRecord&) = default;
};

struct IngestResult {
  Corpus corpus;
  std::vector<RejectedRecord> rejects;
};

inline constexpr std::string_view kRawHeader = "id,year,authors,subjects";

// Bridges raw bibliographic exports to the tabular corpus encoding. Rows are
// "id,year,authors,subjects" with ';' separating multiple authors/subjects.
// Author strings may be "Given ... Family" or "Family, Given ..."; the given
// name is classified through the lexicon. Rows with an unknown-gender author
// or an unresolvable subject are rejected with a reason; malformed rows abort
// the whole ingest with their line number. A subject entry naming the main
// subject ("Economics") is implicit and skipped.
IngestResult ingest_raw(std::istream& in, const GenderLexicon& lexicon,
                        const SubjectRegistry& registry);

IngestResult ingest_raw_file(const std::filesystem::path& path,
                             const GenderLexicon& lexicon,
                             const SubjectRegistry& registry);

}  // namespace subjectnet
