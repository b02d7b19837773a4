#include "subjectnet/subjects.hpp"

#include "subjectnet/errors.hpp"
#include "subjectnet/text.hpp"

namespace subjectnet {

SubjectRegistry::SubjectRegistry(std::vector<std::pair<int, std::string>> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& [code, name] = entries_[i];
    if (code != static_cast<int>(i) + 1) {
      throw ValidationError("registry codes must be contiguous from 1, got " +
                            std::to_string(code) + " at position " +
                            std::to_string(i + 1));
    }
    std::string key = text::fold_case(text::collapse_spaces(name));
    if (key.empty()) {
      throw ValidationError("registry name for code " + std::to_string(code) +
                            " is empty");
    }
    if (!by_folded_name_.emplace(std::move(key), code).second) {
      throw ValidationError("duplicate registry name '" + name + "'");
    }
  }
}

const std::string& SubjectRegistry::name_of(int code) const {
  if (!contains(code)) {
    throw ValidationError("unknown subject code " + std::to_string(code));
  }
  return entries_[static_cast<std::size_t>(code) - 1].second;
}

std::optional<int> SubjectRegistry::code_of(std::string_view name) const {
  auto it = by_folded_name_.find(text::fold_case(text::collapse_spaces(name)));
  if (it == by_folded_name_.end()) return std::nullopt;
  return it->second;
}

const SubjectRegistry& SubjectRegistry::standard() {
  static const SubjectRegistry registry{{
      {1, "Agricultural Economics"},
      {2, "Area Studies"},
      {3, "Business"},
      {4, "Cultural Studies"},
      {5, "Environmental Science"},
      {6, "Education"},
      {7, "Ecology"},
      {8, "Finance"},
      {9, "Geography"},
      {10, "Health Policy"},
      {11, "History Of S.Sciences"},
      {12, "Hospitality"},
      {13, "Industrial Rel. & Labor"},
      {14, "Interdisciplinary St."},
      {15, "International Relations"},
      {16, "Leisure, Sport & Tourism"},
      {17, "Management"},
      {18, "Mathematics"},
      {19, "Occupational Health"},
      {20, "Operations Research"},
      {21, "Planning & Development"},
      {22, "Political Science"},
      {23, "Science & Technology"},
      {24, "Social Sciences"},
      {25, "Sociology"},
      {26, "Statistics & Probability"},
      {27, "Transportation"},
      {28, "Urban Studies"},
      {29, "Engineering"},
  }};
  return registry;
}

}  // namespace subjectnet
