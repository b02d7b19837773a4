#include "subjectnet/gender.hpp"

#include <fstream>

#include "subjectnet/csv.hpp"
#include "subjectnet/errors.hpp"
#include "subjectnet/text.hpp"

namespace subjectnet {

void GenderLexicon::add(std::string_view name, Gender gender) {
  std::string key = text::fold_case(text::trim(name));
  if (key.empty()) throw ValidationError("empty lexicon name");
  if (!exact_.emplace(key, gender).second) {
    throw ValidationError("duplicate lexicon name '" + key + "'");
  }
  auto [it, inserted] = stripped_.emplace(text::strip_diacritics(key), gender);
  if (!inserted && it->second != gender) it->second = std::nullopt;
}

std::optional<Gender> GenderLexicon::lookup(std::string_view given_name) const {
  std::string key = text::fold_case(text::trim(given_name));
  if (key.empty()) return std::nullopt;
  if (auto it = exact_.find(key); it != exact_.end()) return it->second;
  if (auto it = stripped_.find(text::strip_diacritics(key)); it != stripped_.end()) {
    return it->second;
  }
  return std::nullopt;
}

GenderLexicon GenderLexicon::from_csv(std::istream& in) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header || csv::join_row(*header) != "name,gender") {
    throw ValidationError("lexicon: expected header 'name,gender'");
  }
  GenderLexicon lexicon;
  while (auto row = reader.next()) {
    std::size_t line = reader.line();
    if (row->size() != 2) {
      throw ValidationError("lexicon line " + std::to_string(line) +
                            ": expected 2 fields, got " + std::to_string(row->size()));
    }
    std::string g = text::fold_case(text::trim((*row)[1]));
    Gender gender;
    if (g == "f") {
      gender = Gender::female;
    } else if (g == "m") {
      gender = Gender::male;
    } else {
      throw ValidationError("lexicon line " + std::to_string(line) +
                            ": gender must be F or M, got '" + (*row)[1] + "'");
    }
    try {
      lexicon.add((*row)[0], gender);
    } catch (const ValidationError& err) {
      throw ValidationError("lexicon line " + std::to_string(line) + ": " + err.what());
    }
  }
  return lexicon;
}

GenderLexicon GenderLexicon::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file: " + path.string());
  return from_csv(in);
}

GenderCounts infer_gender_counts(const std::vector<std::string>& given_names,
                                 const GenderLexicon& lexicon) {
  GenderCounts counts;
  for (const std::string& name : given_names) {
    auto gender = lexicon.lookup(text::first_token(name));
    if (!gender) {
      ++counts.unknown;
    } else if (*gender == Gender::female) {
      ++counts.women;
    } else {
      ++counts.men;
    }
  }
  return counts;
}

}  // namespace subjectnet
