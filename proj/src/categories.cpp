#include "subjectnet/categories.hpp"

#include "subjectnet/errors.hpp"
#include "subjectnet/text.hpp"

namespace subjectnet {

bool in_category(const PaperRecord& record, Category category) {
  switch (category) {
    case Category::All: return true;
    case Category::WomenOnly: return record.women >= 1 && record.men == 0;
    case Category::WomenAny: return record.women >= 1;
    case Category::Mixed: return record.women >= 1 && record.men >= 1;
    case Category::MenAny: return record.men >= 1;
    case Category::MenOnly: return record.men >= 1 && record.women == 0;
  }
  throw ValidationError("invalid category");
}

std::vector<Category> categorize(const PaperRecord& record) {
  std::vector<Category> out;
  for (Category category : kAllCategories) {
    if (in_category(record, category)) out.push_back(category);
  }
  return out;
}

std::string_view category_token(Category category) {
  switch (category) {
    case Category::All: return "all";
    case Category::WomenOnly: return "wexc";
    case Category::WomenAny: return "winc";
    case Category::Mixed: return "wm";
    case Category::MenAny: return "minc";
    case Category::MenOnly: return "mexc";
  }
  throw ValidationError("invalid category");
}

std::optional<Category> category_from_token(std::string_view token) {
  std::string folded = text::fold_case(text::trim(token));
  for (Category category : kAllCategories) {
    if (folded == category_token(category)) return category;
  }
  return std::nullopt;
}

CategorySubset select(const Corpus& corpus, Category category, bool xsubject_only) {
  CategorySubset subset{category, xsubject_only, {}};
  for (const PaperRecord& record : corpus.records) {
    if (!in_category(record, category)) continue;
    if (xsubject_only && !record.has_extra_subject()) continue;
    subset.records.push_back(record);
  }
  return subset;
}

}  // namespace subjectnet
