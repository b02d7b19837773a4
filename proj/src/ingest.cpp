#include "subjectnet/ingest.hpp"

#include <algorithm>
#include <fstream>

#include "subjectnet/csv.hpp"
#include "subjectnet/errors.hpp"
#include "subjectnet/text.hpp"

namespace subjectnet {

namespace {

// "Family, Given ..." exports put the given name after the comma.
std::string given_name_part(std::string_view author) {
  if (std::size_t comma = author.find(','); comma != std::string_view::npos) {
    return std::string(text::trim(author.substr(comma + 1)));
  }
  return std::string(text::trim(author));
}

std::vector<std::string> split_multi(const std::string& field) {
  std::vector<std::string> out;
  for (const std::string& part : text::split(field, ';')) {
    std::string cleaned = text::collapse_spaces(part);
    if (!cleaned.empty()) out.push_back(std::move(cleaned));
  }
  return out;
}

}  // namespace

IngestResult ingest_raw(std::istream& in, const GenderLexicon& lexicon,
                        const SubjectRegistry& registry) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header || csv::join_row(*header) != kRawHeader) {
    throw ValidationError("raw input: expected header '" + std::string(kRawHeader) + "'");
  }

  IngestResult result{{registry, {}}, {}};
  for (auto row = reader.next(); row; row = reader.next()) {
    std::size_t line = reader.line();
    if (row->size() != 4) {
      throw ValidationError("line " + std::to_string(line) + ": expected 4 fields, got " +
                            std::to_string(row->size()));
    }
    const std::string& id = (*row)[0];
    if (id.empty()) {
      throw ValidationError("line " + std::to_string(line) + ": empty record id");
    }
    auto year = text::parse_int((*row)[1]);
    if (!year) {
      throw ValidationError("line " + std::to_string(line) + ": year '" + (*row)[1] +
                            "' is not an integer");
    }
    auto reject = [&](std::string reason) {
      result.rejects.push_back({id, line, std::move(reason)});
    };
    if (*year < kYearMin || *year > kYearMax) {
      reject("year out of range");
      continue;
    }

    std::vector<std::string> given_names;
    for (const std::string& author : split_multi((*row)[2])) {
      given_names.push_back(given_name_part(author));
    }
    if (given_names.empty()) {
      reject("no authors");
      continue;
    }
    GenderCounts counts = infer_gender_counts(given_names, lexicon);
    if (counts.unknown > 0) {
      reject("unknown gender");
      continue;
    }

    std::vector<int> codes;
    bool resolved = true;
    for (const std::string& subject : split_multi((*row)[3])) {
      if (text::fold_case(subject) == "economics") continue;  // implicit main subject
      auto code = registry.code_of(subject);
      if (!code) {
        reject("unknown subject '" + subject + "'");
        resolved = false;
        break;
      }
      if (std::find(codes.begin(), codes.end(), *code) == codes.end()) {
        codes.push_back(*code);
      }
    }
    if (!resolved) continue;
    if (codes.size() > static_cast<std::size_t>(kMaxExtraSubjects)) {
      reject("more than " + std::to_string(kMaxExtraSubjects) + " extra subjects");
      continue;
    }

    PaperRecord record;
    record.id = id;
    record.year = static_cast<int>(*year);
    record.women = counts.women;
    record.men = counts.men;
    for (std::size_t i = 0; i < codes.size(); ++i) record.slots[i] = codes[i];
    validate_record(record, registry, "line " + std::to_string(line));
    result.corpus.records.push_back(std::move(record));
  }
  validate_corpus(result.corpus);
  return result;
}

IngestResult ingest_raw_file(const std::filesystem::path& path,
                             const GenderLexicon& lexicon,
                             const SubjectRegistry& registry) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open raw records file: " + path.string());
  return ingest_raw(in, lexicon, registry);
}

}  // namespace subjectnet
