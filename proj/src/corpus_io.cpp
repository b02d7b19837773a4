#include "subjectnet/corpus_io.hpp"

#include <fstream>
#include <sstream>

#include "subjectnet/csv.hpp"
#include "subjectnet/errors.hpp"
#include "subjectnet/text.hpp"

namespace subjectnet {

namespace {

int parse_count(const std::string& field, std::size_t line, const char* what) {
  auto value = text::parse_int(field);
  if (!value) {
    throw ValidationError("line " + std::to_string(line) + ": " + what +
                          " '" + field + "' is not an integer");
  }
  return static_cast<int>(*value);
}

}  // namespace

Corpus parse_corpus(std::istream& in, const SubjectRegistry& registry) {
  csv::Reader reader(in);

  auto header = reader.next();
  if (!header) {
    throw ValidationError("empty input: missing header row");
  }
  if (csv::join_row(*header) != kCorpusHeader) {
    throw ValidationError("line " + std::to_string(reader.line()) +
                          ": expected header '" + std::string(kCorpusHeader) +
                          "', got '" + csv::join_row(*header) + "'");
  }

  Corpus corpus{registry, {}};
  while (auto row = reader.next()) {
    std::size_t line = reader.line();
    if (row->size() != 9) {
      throw ValidationError("line " + std::to_string(line) + ": expected 9 fields, got " +
                            std::to_string(row->size()));
    }
    PaperRecord record;
    record.id = (*row)[0];
    record.year = parse_count((*row)[1], line, "year");
    record.women = parse_count((*row)[2], line, "female author count");
    record.men = parse_count((*row)[3], line, "male author count");
    for (int i = 0; i < kMaxExtraSubjects; ++i) {
      record.slots[static_cast<std::size_t>(i)] =
          parse_count((*row)[static_cast<std::size_t>(4 + i)], line, "subject slot");
    }
    validate_record(record, registry, "line " + std::to_string(line));
    corpus.records.push_back(std::move(record));
  }
  validate_corpus(corpus);
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, const SubjectRegistry& registry) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path.string());
  return parse_corpus(in, registry);
}

std::string serialize_corpus(const Corpus& corpus) {
  std::string out{kCorpusHeader};
  out.push_back('\n');
  for (const PaperRecord& record : corpus.records) {
    std::vector<std::string> fields;
    fields.reserve(9);
    fields.push_back(record.id);
    fields.push_back(std::to_string(record.year));
    fields.push_back(std::to_string(record.women));
    fields.push_back(std::to_string(record.men));
    for (int s : record.slots) fields.push_back(std::to_string(s));
    out += csv::join_row(fields);
    out.push_back('\n');
  }
  return out;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus file: " + path.string());
  out << serialize_corpus(corpus);
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace subjectnet
