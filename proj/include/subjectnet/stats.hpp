#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "subjectnet/categories.hpp"

namespace subjectnet {

struct CategorySummary {
  std::size_t size = 0;
  std::optional<double> mean_authors;
  std::optional<double> pct_female;  // mean per-paper female share, percent
  std::size_t single_author_count = 0;
  std::optional<double> mean_subjects;
  std::size_t xsubject_count = 0;
};

// Whether the per-paper subject count includes the implicit main subject
// (1 + extras) or the extra subjects alone.
enum class SubjectMean { IncludeMain, ExtrasOnly };

// Means are absent when the subset is empty.
CategorySummary summarize(const CategorySubset& subset,
                          SubjectMean mode = SubjectMean::IncludeMain);

struct YearlyDistribution {
  // counts[category][year - kYearMin]
  std::map<Category, std::array<std::size_t, kYearSpan>> counts;
};

YearlyDistribution yearly_counts(const Corpus& corpus, bool xsubject_only,
                                 bool single_only);

// Relative frequencies (%) of extra-subject occurrences per category,
// computed over the xsubject-restricted subsets. Subjects are ranked by
// their frequency in the All category, ties broken by ascending code.
struct SubjectFrequencyTable {
  std::vector<int> ranked_codes;                 // top_k codes, All-rank order
  std::map<Category, std::map<int, double>> pct; // only codes with occurrences

  // (code, %) pairs in rank order; empty when the category has no occurrences.
  std::vector<std::pair<int, double>> rows(Category category) const;
};

SubjectFrequencyTable subject_frequencies(const Corpus& corpus, std::size_t top_k);

}  // namespace subjectnet
