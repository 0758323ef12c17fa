#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "reacproc/canonical.hpp"
#include "reacproc/conservation.hpp"
#include "reacproc/tables.hpp"

namespace reacproc {

/// One statement as read from an input file. Lines are 1-based.
struct Statement {
  std::string text;
  std::size_t first_line = 0;
  std::size_t last_line = 0;
  /// False for trailing text that never reached a ';'.
  bool complete = true;

  friend bool operator==(const Statement&, const Statement&) = default;
};

/// Splits a stream into statements. A line ending in '\' (trailing blanks
/// ignored) continues on the next line, the backslash becoming one space.
/// Each logical line is cut after every ';'; leftover non-blank text is
/// returned as an incomplete statement.
std::vector<Statement> assemble_statements(std::istream& in);

class BatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tables {
  Dictionary dict;
  PropertyTable properties;
};

Tables load_tables(const std::filesystem::path& dict,
                   const std::filesystem::path& props,
                   const std::filesystem::path& leptons);

enum class Disposition { kAccept, kReject, kUnknownParticle, kParseError };

std::string_view to_string(Disposition d);

struct Outcome {
  Disposition disposition = Disposition::kParseError;
  /// Canonical rendering; empty when the statement did not parse.
  std::string canonical;
  /// Human-readable explanation for the log.
  std::string reason;
  Verdict verdict;
};

/// The per-statement pipeline: parse, canonicalize, check.
class Processor {
 public:
  Processor(const Tables& tables, OrderingMode mode, std::vector<Law> laws)
      : tables_(tables), mode_(mode), laws_(std::move(laws)) {}

  Outcome process(const Statement& s) const;

 private:
  const Tables& tables_;
  OrderingMode mode_;
  std::vector<Law> laws_;
};

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path dict_path;
  std::filesystem::path props_path;
  std::filesystem::path leptons_path;
  OrderingMode mode = OrderingMode::kDict;
  std::vector<Law> laws = default_laws();
  std::filesystem::path outdir = ".";
  unsigned jobs = 1;
};

struct RunSummary {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t unknown = 0;
  std::size_t parse_failed = 0;
  std::map<std::string, std::size_t> violations_per_law;

  std::size_t total() const { return accepted + rejected + unknown + parse_failed; }
};

inline constexpr const char* kAcceptFile = "rp-accept.txt";
inline constexpr const char* kAcceptSortedFile = "rp-accept-s.txt";
inline constexpr const char* kRejectFile = "rp-reject.txt";
inline constexpr const char* kRejectSortedFile = "rp-reject-s.txt";
inline constexpr const char* kUnknownFile = "rp-unknown.txt";
inline constexpr const char* kLogFile = "rp-log.txt";

/// Processes every input file and writes the six rp-*.txt files into
/// cfg.outdir, truncating earlier contents. Log lines have the form
/// "STATUS<TAB>reason<TAB>original statement". Throws TableError when the
/// tables cannot be loaded and BatchError on I/O failure.
RunSummary process_file(const RunConfig& cfg);

/// Same, with tables already loaded.
RunSummary process_file(const RunConfig& cfg, const Tables& tables);

}  // namespace reacproc
