#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subjectnet {

// Fixed table mapping secondary-subject codes to names. Codes are contiguous
// 1..size(); code 0 is the empty-slot sentinel and never belongs to a
// registry. Name lookup is case-insensitive and whitespace-normalized.
class SubjectRegistry {
 public:
  explicit SubjectRegistry(std::vector<std::pair<int, std::string>> entries);

  // The built-in table of the 29 secondary subjects.
  static const SubjectRegistry& standard();

  int size() const { return static_cast<int>(entries_.size()); }
  bool contains(int code) const { return code >= 1 && code <= size(); }
  const std::string& name_of(int code) const;
  std::optional<int> code_of(std::string_view name) const;
  const std::vector<std::pair<int, std::string>>& entries() const { return entries_; }

  friend bool operator==(const SubjectRegistry&, const SubjectRegistry&) = default;

 private:
  std::vector<std::pair<int, std::string>> entries_;
  std::map<std::string, int> by_folded_name_;
};

}  // namespace subjectnet
