#include "reacproc/tables.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "reacproc/lexer.hpp"

namespace reacproc {

DuplicateSynonym::DuplicateSynonym(const std::string& name, std::size_t line)
    : TableError("line " + std::to_string(line) + ": synonym '" + name +
                 "' already defined"),
      name_(name),
      line_(line) {}

MalformedRow::MalformedRow(const std::string& what, std::size_t line)
    : TableError("line " + std::to_string(line) + ": " + what), line_(line) {}

DuplicateRow::DuplicateRow(const std::string& name)
    : TableError("duplicate property row for '" + name + "'"), name_(name) {}

void Dictionary::add_entry(std::vector<std::string> names, std::size_t line) {
  if (names.empty()) return;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (index_.contains(names[i])) throw DuplicateSynonym(names[i], line);
    for (std::size_t j = 0; j < i; ++j)
      if (names[j] == names[i]) throw DuplicateSynonym(names[i], line);
  }
  const std::size_t rank = entries_.size();
  for (const auto& n : names) index_.emplace(n, rank);
  entries_.push_back(std::move(names));
}

std::optional<Dictionary::Lookup> Dictionary::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return Lookup{it->second, entries_[it->second].front()};
}

std::optional<std::size_t> Dictionary::rank(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string_view Dictionary::resolve(std::string_view name) const {
  auto hit = find(name);
  return hit ? hit->key : name;
}

bool Dictionary::is_key(std::string_view name) const {
  auto hit = find(name);
  return hit && hit->key == name;
}

QuantumVector QuantumVector::operator-() const {
  QuantumVector out;
  for (std::size_t i = 0; i < kComponentCount; ++i) out.values[i] = -values[i];
  return out;
}

const QuantumVector* PropertyTable::find(std::string_view name) const {
  auto it = rows_.find(name);
  return it == rows_.end() ? nullptr : &it->second;
}

void PropertyTable::insert(std::string name, QuantumVector v) {
  auto [it, inserted] = rows_.emplace(std::move(name), v);
  if (!inserted) throw DuplicateRow(it->first);
}

namespace {

// Splits a line into whitespace-separated fields; comment and blank lines
// yield nothing.
std::vector<std::string> split_fields(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream in(line);
  std::vector<std::string> fields;
  std::string field;
  while (in >> field) fields.push_back(std::move(field));
  if (!fields.empty() && fields.front().front() == '#') fields.clear();
  return fields;
}

int parse_int(const std::string& field, std::size_t line) {
  int value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw MalformedRow("'" + field + "' is not an integer", line);
  return value;
}

struct Row {
  std::string name;
  std::vector<int> values;
  std::size_t line;
};

std::vector<Row> read_rows(std::istream& in, std::size_t arity) {
  std::vector<Row> rows;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    auto fields = split_fields(std::move(text));
    if (fields.empty()) continue;
    if (fields.size() != arity + 1)
      throw MalformedRow("expected a name and " + std::to_string(arity) +
                             " integers, got " + std::to_string(fields.size()) +
                             " fields",
                         line);
    Row row{fields[0], {}, line};
    for (std::size_t i = 1; i < fields.size(); ++i)
      row.values.push_back(parse_int(fields[i], line));
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw TableError("read error");
  return rows;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open " + path.string());
  return in;
}

}  // namespace

Dictionary load_dictionary(std::istream& source) {
  Dictionary dict;
  std::string text;
  std::size_t line = 0;
  while (std::getline(source, text)) {
    ++line;
    auto names = split_fields(std::move(text));
    if (names.empty()) continue;
    for (const auto& n : names)
      if (!is_valid_particle_name(n))
        throw MalformedRow("'" + n + "' is not a valid particle name", line);
    dict.add_entry(std::move(names), line);
  }
  if (source.bad()) throw TableError("read error");
  if (dict.size() == 0) throw EmptyDictionary();
  return dict;
}

PropertyTable load_property_table(std::istream& props, std::istream& leptons,
                                  const Dictionary& dict) {
  PropertyTable table;
  auto key_of = [&](const Row& row, std::string_view file) {
    auto hit = dict.find(row.name);
    if (!hit) {
      table.add_warning(std::string(file) + " line " + std::to_string(row.line) +
                        ": '" + row.name + "' is not in the dictionary");
      return row.name;
    }
    return std::string(hit->key);
  };

  for (const auto& row : read_rows(props, 6)) {
    QuantumVector v;
    for (std::size_t i = 0; i < 6; ++i) v.values[i] = row.values[i];
    table.insert(key_of(row, "properties"), v);
  }

  std::map<std::string, bool, std::less<>> seen_lepton;
  for (const auto& row : read_rows(leptons, 3)) {
    std::string key = key_of(row, "leptons");
    if (!seen_lepton.emplace(key, true).second) throw DuplicateRow(key);
    QuantumVector& v = table.at_or_insert(key);
    v[Component::kLe] = row.values[0];
    v[Component::kLmu] = row.values[1];
    v[Component::kLtau] = row.values[2];
  }
  return table;
}

Dictionary load_dictionary_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_dictionary(in);
}

PropertyTable load_property_files(const std::filesystem::path& props,
                                  const std::filesystem::path& leptons,
                                  const Dictionary& dict) {
  auto p = open_or_throw(props);
  auto l = open_or_throw(leptons);
  return load_property_table(p, l, dict);
}

}  // namespace reacproc
