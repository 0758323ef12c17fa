#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reacproc {

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateSynonym : public TableError {
 public:
  DuplicateSynonym(const std::string& name, std::size_t line);
  const std::string& name() const { return name_; }
  std::size_t line() const { return line_; }

 private:
  std::string name_;
  std::size_t line_;
};

class EmptyDictionary : public TableError {
 public:
  EmptyDictionary() : TableError("dictionary has no entries") {}
};

class MalformedRow : public TableError {
 public:
  MalformedRow(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateRow : public TableError {
 public:
  explicit DuplicateRow(const std::string& name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Synonym groups in file order. The first name of a group is its key
/// (PDG) name; the group's position is its dictionary rank.
class Dictionary {
 public:
  struct Lookup {
    std::size_t rank;
    std::string_view key;
  };

  /// Appends a synonym group. Throws DuplicateSynonym (with `line`) if any
  /// name is already present.
  void add_entry(std::vector<std::string> names, std::size_t line = 0);

  std::optional<Lookup> find(std::string_view name) const;
  std::optional<std::size_t> rank(std::string_view name) const;

  /// Key name for a known synonym, `name` itself otherwise.
  std::string_view resolve(std::string_view name) const;

  bool is_key(std::string_view name) const;
  const std::vector<std::vector<std::string>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<std::vector<std::string>> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class Component : std::size_t {
  kCharge,       // units of e/3
  kBaryon,       // units of 1/3
  kStrangeness,
  kCharm,
  kBottomness,
  kTopness,
  kLe,
  kLmu,
  kLtau,
};

inline constexpr std::size_t kComponentCount = 9;

/// Additive quantum numbers of one particle. Charge and baryon number are
/// stored in thirds so that quark rows stay integral.
struct QuantumVector {
  std::array<int, kComponentCount> values{};

  int operator[](Component c) const { return values[static_cast<std::size_t>(c)]; }
  int& operator[](Component c) { return values[static_cast<std::size_t>(c)]; }

  QuantumVector operator-() const;
  friend bool operator==(const QuantumVector&, const QuantumVector&) = default;
};

class PropertyTable {
 public:
  const QuantumVector* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  /// Throws DuplicateRow if `name` is already present.
  void insert(std::string name, QuantumVector v);
  QuantumVector& at_or_insert(const std::string& name) { return rows_[name]; }

  const std::map<std::string, QuantumVector, std::less<>>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  /// Non-fatal load diagnostics, e.g. rows whose name is not a dictionary key.
  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

 private:
  std::map<std::string, QuantumVector, std::less<>> rows_;
  std::vector<std::string> warnings_;
};

/// One synonym group per line, whitespace separated; '#' starts a comment
/// line. Throws DuplicateSynonym, EmptyDictionary, MalformedRow.
Dictionary load_dictionary(std::istream& source);

/// `props` rows: "name q3 b3 S C B T"; `leptons` rows: "name Le Lmu Ltau".
/// Names are resolved through `dict`. Throws MalformedRow, DuplicateRow.
PropertyTable load_property_table(std::istream& props, std::istream& leptons,
                                  const Dictionary& dict);

Dictionary load_dictionary_file(const std::filesystem::path& path);
PropertyTable load_property_files(const std::filesystem::path& props,
                                  const std::filesystem::path& leptons,
                                  const Dictionary& dict);

}  // namespace reacproc
