#include "subjectnet/record.hpp"

#include <set>

#include "subjectnet/errors.hpp"

namespace subjectnet {

bool PaperRecord::has_extra_subject() const {
  for (int s : slots)
    if (s != 0) return true;
  return false;
}

int PaperRecord::extra_subject_count() const {
  int n = 0;
  for (int s : slots)
    if (s != 0) ++n;
  return n;
}

std::vector<int> PaperRecord::extra_subjects() const {
  std::vector<int> out;
  for (int s : slots)
    if (s != 0) out.push_back(s);
  return out;
}

void validate_record(const PaperRecord& record, const SubjectRegistry& registry,
                     const std::string& where) {
  auto fail = [&](const std::string& what) {
    throw ValidationError(where.empty() ? what : where + ": " + what);
  };
  if (record.id.empty()) fail("empty record id");
  if (record.year < kYearMin || record.year > kYearMax) {
    fail("year " + std::to_string(record.year) + " outside " +
         std::to_string(kYearMin) + ".." + std::to_string(kYearMax));
  }
  if (record.women < 0 || record.men < 0) fail("negative author count");
  if (record.author_count() < 1) fail("record has no authors (w+m = 0)");
  std::set<int> seen;
  for (int s : record.slots) {
    if (s == 0) continue;
    if (!registry.contains(s)) {
      fail("subject code " + std::to_string(s) + " outside 0.." +
           std::to_string(registry.size()));
    }
    if (!seen.insert(s).second) {
      fail("duplicate subject code " + std::to_string(s));
    }
  }
}

void validate_corpus(const Corpus& corpus) {
  std::set<std::string> ids;
  for (std::size_t i = 0; i < corpus.records.size(); ++i) {
    const PaperRecord& record = corpus.records[i];
    validate_record(record, corpus.registry, "record " + std::to_string(i + 1));
    if (!ids.insert(record.id).second) {
      throw ValidationError("duplicate record id '" + record.id + "'");
    }
  }
}

}  // namespace subjectnet
