#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subjectnet/errors.hpp"
#include "subjectnet/stats.hpp"
#include "test_support.hpp"

using namespace subjectnet;

namespace {

PaperRecord rec(std::string id, int year, int women, int men,
                std::vector<int> extras = {}) {
  PaperRecord record;
  record.id = std::move(id);
  record.year = year;
  record.women = women;
  record.men = men;
  for (std::size_t i = 0; i < extras.size(); ++i) record.slots[i] = extras[i];
  return record;
}

}  // namespace

TEST_SUITE_BEGIN("stats");

TEST_CASE("one-record summary") {
  CategorySubset subset{Category::All, false,
                        {rec("a", 2012, 1, 1, {3})}};
  CategorySummary summary = summarize(subset);
  CHECK(summary.size == 1);
  CHECK(summary.mean_authors == 2.0);
  CHECK(summary.pct_female == 50.0);
  CHECK(summary.single_author_count == 0);
  CHECK(summary.mean_subjects == 2.0);  // main subject counted
  CHECK(summary.xsubject_count == 1);

  CHECK(*summarize(subset, SubjectMean::ExtrasOnly).mean_subjects == 1.0);
}

TEST_CASE("empty subset leaves the means absent") {
  CategorySummary summary = summarize(CategorySubset{});
  CHECK(summary.size == 0);
  CHECK_FALSE(summary.mean_authors.has_value());
  CHECK_FALSE(summary.pct_female.has_value());
  CHECK_FALSE(summary.mean_subjects.has_value());
}

TEST_CASE("exclusive categories pin the female share") {
  auto rng = testsupport::make_rng(31);
  for (int i = 0; i < 30; ++i) {
    Corpus corpus = testsupport::random_corpus(rng, 100);
    CategorySummary wexc = summarize(select(corpus, Category::WomenOnly, false));
    CategorySummary mexc = summarize(select(corpus, Category::MenOnly, false));
    if (wexc.size > 0) CHECK(*wexc.pct_female == 100.0);
    if (mexc.size > 0) CHECK(*mexc.pct_female == 0.0);
  }
}

TEST_CASE("All summary is the size-weighted merge of the exclusive trio") {
  auto rng = testsupport::make_rng(37);
  for (int i = 0; i < 50; ++i) {
    Corpus corpus = testsupport::random_corpus(rng, 120);
    CategorySummary all = summarize(select(corpus, Category::All, false));
    CategorySummary parts[3] = {
        summarize(select(corpus, Category::WomenOnly, false)),
        summarize(select(corpus, Category::Mixed, false)),
        summarize(select(corpus, Category::MenOnly, false)),
    };
    std::size_t size = 0, single = 0, xsubject = 0;
    double authors = 0.0, female = 0.0, subjects = 0.0;
    for (const CategorySummary& part : parts) {
      size += part.size;
      single += part.single_author_count;
      xsubject += part.xsubject_count;
      if (part.size > 0) {
        authors += static_cast<double>(part.size) * *part.mean_authors;
        female += static_cast<double>(part.size) * *part.pct_female;
        subjects += static_cast<double>(part.size) * *part.mean_subjects;
      }
    }
    REQUIRE(all.size == size);
    CHECK(all.single_author_count == single);
    CHECK(all.xsubject_count == xsubject);
    if (size > 0) {
      double n = static_cast<double>(size);
      CHECK(*all.mean_authors == doctest::Approx(authors / n).epsilon(1e-9));
      CHECK(*all.pct_female == doctest::Approx(female / n).epsilon(1e-9));
      CHECK(*all.mean_subjects == doctest::Approx(subjects / n).epsilon(1e-9));
    }
  }
}

TEST_CASE("yearly counts for a single record") {
  Corpus corpus{SubjectRegistry::standard(), {rec("a", 2014, 0, 1, {1})}};
  YearlyDistribution dist = yearly_counts(corpus, false, false);
  for (int year = kYearMin; year <= kYearMax; ++year) {
    std::size_t slot = static_cast<std::size_t>(year - kYearMin);
    std::size_t expected = year == 2014 ? 1 : 0;
    CHECK(dist.counts.at(Category::MenOnly)[slot] == expected);
    CHECK(dist.counts.at(Category::All)[slot] == expected);
    CHECK(dist.counts.at(Category::WomenAny)[slot] == 0);
  }
}

TEST_CASE("yearly totals match the category sizes under both flags") {
  auto rng = testsupport::make_rng(41);
  for (int i = 0; i < 30; ++i) {
    Corpus corpus = testsupport::random_corpus(rng, 120);
    YearlyDistribution full = yearly_counts(corpus, false, false);
    YearlyDistribution xsub = yearly_counts(corpus, true, false);
    YearlyDistribution single = yearly_counts(corpus, false, true);
    for (Category category : kAllCategories) {
      std::size_t full_total = 0, xsub_total = 0, single_total = 0;
      for (std::size_t slot = 0; slot < kYearSpan; ++slot) {
        full_total += full.counts.at(category)[slot];
        xsub_total += xsub.counts.at(category)[slot];
        single_total += single.counts.at(category)[slot];
      }
      CategorySummary summary = summarize(select(corpus, category, false));
      CHECK(full_total == summary.size);
      CHECK(xsub_total == summary.xsubject_count);
      CHECK(single_total == summary.single_author_count);
    }
  }
}

TEST_CASE("exclusive yearly counts add up to All, per year") {
  auto rng = testsupport::make_rng(43);
  for (int i = 0; i < 20; ++i) {
    Corpus corpus = testsupport::random_corpus(rng, 120);
    for (bool xsubject : {false, true}) {
      YearlyDistribution dist = yearly_counts(corpus, xsubject, false);
      for (std::size_t slot = 0; slot < kYearSpan; ++slot) {
        CHECK(dist.counts.at(Category::All)[slot] ==
              dist.counts.at(Category::WomenOnly)[slot] +
                  dist.counts.at(Category::Mixed)[slot] +
                  dist.counts.at(Category::MenOnly)[slot]);
      }
    }
  }
}

TEST_CASE("subject frequencies tally occurrences per category") {
  Corpus corpus{SubjectRegistry::standard(),
                {rec("a", 2012, 1, 0, {3, 8}), rec("b", 2013, 2, 0, {3})}};
  SubjectFrequencyTable table = subject_frequencies(corpus, 6);
  REQUIRE(table.ranked_codes == std::vector<int>{3, 8});

  auto wexc = table.rows(Category::WomenOnly);
  REQUIRE(wexc.size() == 2);
  CHECK(wexc[0].first == 3);
  CHECK(wexc[0].second == doctest::Approx(200.0 / 3).epsilon(1e-12));
  CHECK(wexc[1].first == 8);
  CHECK(wexc[1].second == doctest::Approx(100.0 / 3).epsilon(1e-12));

  CHECK(table.rows(Category::MenOnly).empty());  // no occurrences at all
}

TEST_CASE("ranking ties break by ascending code") {
  Corpus corpus{SubjectRegistry::standard(),
                {rec("a", 2012, 1, 0, {9, 4}), rec("b", 2012, 0, 1, {4, 9, 2})}};
  SubjectFrequencyTable table = subject_frequencies(corpus, 2);
  CHECK(table.ranked_codes == std::vector<int>{4, 9});  // both occur twice
}

TEST_CASE("top_k is capped by the registry") {
  Corpus corpus{SubjectRegistry::standard(), {}};
  CHECK_THROWS_AS(subject_frequencies(corpus, 30), ValidationError);
  CHECK(subject_frequencies(corpus, 29).ranked_codes.empty());
}

TEST_SUITE_END();
