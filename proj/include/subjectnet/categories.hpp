#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "subjectnet/record.hpp"

namespace subjectnet {

// Authorship categories over the (women, men) author counts. The exclusive
// trio WomenOnly / Mixed / MenOnly partitions any corpus; the inclusive pair
// overlaps it: WomenAny = WomenOnly + Mixed, MenAny = MenOnly + Mixed.
enum class Category {
  All = 0,
  WomenOnly = 1,   // w >= 1, m = 0
  WomenAny = 2,    // w >= 1
  Mixed = 3,       // w >= 1, m >= 1
  MenAny = 4,      // m >= 1
  MenOnly = 5,     // m >= 1, w = 0
};

inline constexpr std::array<Category, 6> kAllCategories = {
    Category::All,     Category::WomenOnly, Category::WomenAny,
    Category::Mixed,   Category::MenAny,    Category::MenOnly,
};

bool in_category(const PaperRecord& record, Category category);

// All categories whose predicate holds, in enum order. Always contains All
// and exactly one of {WomenOnly, Mixed, MenOnly}.
std::vector<Category> categorize(const PaperRecord& record);

// CLI-facing tokens: all, wexc, winc, wm, minc, mexc (case-insensitive).
std::string_view category_token(Category category);
std::optional<Category> category_from_token(std::string_view token);

struct CategorySubset {
  Category category = Category::All;
  bool xsubject_only = false;
  std::vector<PaperRecord> records;  // corpus order
};

// Records matching the category predicate, optionally restricted to papers
// with at least one extra subject. Order-preserving.
CategorySubset select(const Corpus& corpus, Category category, bool xsubject_only);

}  // namespace subjectnet
