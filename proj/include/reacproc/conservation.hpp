#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reacproc/model.hpp"
#include "reacproc/tables.hpp"

namespace reacproc {

/// How the initial-state sum must relate to the final-state sum.
enum class Relation : int {
  kLessEqual = -1,    // initial <= final
  kEqual = 0,         // initial == final
  kGreaterEqual = 1,  // initial >= final
};

struct Law {
  std::string name;
  Component component;
  Relation relation = Relation::kEqual;

  friend bool operator==(const Law&, const Law&) = default;
};

/// charge, baryon, S, C, B, T, Le, Lmu, Ltau; all equalities.
std::vector<Law> default_laws();

/// Looks a law up by its name in default_laws().
std::optional<Law> find_law(std::string_view name);

bool satisfies(int initial_sum, int final_sum, Relation relation);

struct Violation {
  std::string law;
  /// Where the check failed, e.g. "final[0]" or "final[0].W+.decay[2]".
  std::string location;
  int initial_sum;
  int final_sum;

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class Status { kAccept, kReject, kUnknown };

std::string_view to_string(Status s);

struct Verdict {
  Status status = Status::kAccept;
  std::vector<Violation> violations;
  std::vector<std::string> unknown_names;
};

struct UnknownParticle {
  std::string name;
};

/// Sum of count x component over the sequence. Decays are not descended
/// into: the decaying particle carries its own quantum numbers.
std::variant<int, UnknownParticle> state_sum(const ParticleSequence& seq,
                                             Component component,
                                             const PropertyTable& table);

struct LawResult {
  std::vector<Violation> violations;
  /// First name missing from the table; checking stops there.
  std::optional<std::string> unknown;
};

/// Checks every top-level group against the initial state, then every
/// decay group against its parent particle, recursively.
LawResult test_reaction(const Reaction& r, const Law& law,
                        const PropertyTable& table);

/// Runs all laws. Unknown dominates reject, which dominates accept.
Verdict check_all_laws(const Reaction& r, const std::vector<Law>& laws,
                       const PropertyTable& table);

/// Distinct names in `r` missing from `table`, in tree order.
std::vector<std::string> unknown_names(const Reaction& r,
                                       const PropertyTable& table);

}  // namespace reacproc
