#include "subjectnet/stats.hpp"

#include <algorithm>

#include "subjectnet/errors.hpp"

namespace subjectnet {

CategorySummary summarize(const CategorySubset& subset, SubjectMean mode) {
  CategorySummary summary;
  summary.size = subset.records.size();
  if (summary.size == 0) return summary;

  double author_sum = 0.0;
  double female_share_sum = 0.0;
  double subject_sum = 0.0;
  for (const PaperRecord& record : subset.records) {
    int authors = record.author_count();
    author_sum += authors;
    female_share_sum += 100.0 * record.women / authors;
    int extras = record.extra_subject_count();
    subject_sum += mode == SubjectMean::IncludeMain ? extras + 1 : extras;
    if (record.single_author()) ++summary.single_author_count;
    if (record.has_extra_subject()) ++summary.xsubject_count;
  }
  double n = static_cast<double>(summary.size);
  summary.mean_authors = author_sum / n;
  summary.pct_female = female_share_sum / n;
  summary.mean_subjects = subject_sum / n;
  return summary;
}

YearlyDistribution yearly_counts(const Corpus& corpus, bool xsubject_only,
                                 bool single_only) {
  YearlyDistribution dist;
  for (Category category : kAllCategories) dist.counts[category] = {};
  for (const PaperRecord& record : corpus.records) {
    if (xsubject_only && !record.has_extra_subject()) continue;
    if (single_only && !record.single_author()) continue;
    std::size_t slot = static_cast<std::size_t>(record.year - kYearMin);
    for (Category category : categorize(record)) {
      ++dist.counts[category][slot];
    }
  }
  return dist;
}

SubjectFrequencyTable subject_frequencies(const Corpus& corpus, std::size_t top_k) {
  if (top_k > static_cast<std::size_t>(corpus.registry.size())) {
    throw ValidationError("top_k " + std::to_string(top_k) +
                          " exceeds registry size " +
                          std::to_string(corpus.registry.size()));
  }

  std::map<Category, std::map<int, std::size_t>> occurrences;
  std::map<Category, std::size_t> totals;
  for (const PaperRecord& record : corpus.records) {
    if (!record.has_extra_subject()) continue;
    std::vector<Category> cats = categorize(record);
    for (int code : record.extra_subjects()) {
      for (Category category : cats) {
        ++occurrences[category][code];
        ++totals[category];
      }
    }
  }

  // Rank by All-category occurrence count, ties by ascending code.
  std::vector<std::pair<int, std::size_t>> ranked(occurrences[Category::All].begin(),
                                                  occurrences[Category::All].end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > top_k) ranked.resize(top_k);

  SubjectFrequencyTable table;
  for (const auto& [code, count] : ranked) table.ranked_codes.push_back(code);
  for (Category category : kAllCategories) {
    std::size_t total = totals[category];
    if (total == 0) continue;
    std::map<int, double> pct;
    for (const auto& [code, count] : occurrences[category]) {
      pct[code] = 100.0 * static_cast<double>(count) / static_cast<double>(total);
    }
    table.pct[category] = std::move(pct);
  }
  return table;
}

std::vector<std::pair<int, double>> SubjectFrequencyTable::rows(Category category) const {
  std::vector<std::pair<int, double>> out;
  auto it = pct.find(category);
  if (it == pct.end()) return out;
  out.reserve(ranked_codes.size());
  for (int code : ranked_codes) {
    auto fit = it->second.find(code);
    out.emplace_back(code, fit == it->second.end() ? 0.0 : fit->second);
  }
  return out;
}

}  // namespace subjectnet
