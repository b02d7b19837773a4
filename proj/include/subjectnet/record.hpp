#pragma once

#include <array>
#include <string>
#include <vector>

#include "subjectnet/subjects.hpp"

namespace subjectnet {

inline constexpr int kYearMin = 2010;
inline constexpr int kYearMax = 2015;
inline constexpr int kYearSpan = kYearMax - kYearMin + 1;
inline constexpr int kMaxExtraSubjects = 5;

// One bibliographic item: author counts by gender plus up to five secondary
// subject codes. The main subject is implicit and never stored in a slot.
struct PaperRecord {
  std::string id;
  int year = kYearMin;
  int women = 0;
  int men = 0;
  std::array<int, kMaxExtraSubjects> slots{};  // 0 marks an empty slot

  int author_count() const { return women + men; }
  bool single_author() const { return author_count() == 1; }
  bool has_extra_subject() const;
  int extra_subject_count() const;
  std::vector<int> extra_subjects() const;  // nonzero slots in slot order

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

struct Corpus {
  SubjectRegistry registry;
  std::vector<PaperRecord> records;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Throw ValidationError on the first violated invariant. `where` prefixes the
// message ("line 12: ...").
void validate_record(const PaperRecord& record, const SubjectRegistry& registry,
                     const std::string& where = {});
void validate_corpus(const Corpus& corpus);

}  // namespace subjectnet
