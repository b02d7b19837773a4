#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subjectnet {

enum class Gender { female, male };

// Given-name -> gender table. Keys are stored case-folded; lookups try the
// exact folded form first and fall back to a diacritics-stripped index, so
// "Joao" still matches a lexicon entry for "João". Stripped-form collisions
// with conflicting genders are treated as no match.
class GenderLexicon {
 public:
  GenderLexicon() = default;

  // CSV with header "name,gender", gender F or M.
  static GenderLexicon from_csv(std::istream& in);
  static GenderLexicon from_file(const std::filesystem::path& path);

  void add(std::string_view name, Gender gender);
  std::optional<Gender> lookup(std::string_view given_name) const;
  std::size_t size() const { return exact_.size(); }

 private:
  std::map<std::string, Gender> exact_;
  std::map<std::string, std::optional<Gender>> stripped_;  // nullopt = ambiguous
};

struct GenderCounts {
  int women = 0;
  int men = 0;
  int unknown = 0;

  friend bool operator==(const GenderCounts&, const GenderCounts&) = default;
};

// Classifies each name by its first token. Unmatched names count as unknown;
// women + men + unknown == names.size().
GenderCounts infer_gender_counts(const std::vector<std::string>& given_names,
                                 const GenderLexicon& lexicon);

}  // namespace subjectnet
