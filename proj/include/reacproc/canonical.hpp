#pragma once

#include <compare>
#include <string_view>

#include "reacproc/model.hpp"
#include "reacproc/tables.hpp"

namespace reacproc {

enum class OrderingMode {
  kTrueLex,  // bytewise lexicographic order of names
  kDict,     // dictionary rank; unknown names after known ones, bytewise
};

/// Replaces every known synonym by its key name, everywhere in the tree.
Reaction resolve_synonyms(const Reaction& r, const Dictionary& dict);

/// Eliminates "?compo" nodes by distribution: "( A + B ) X" becomes
/// "A X + B X". Nested brackets and brackets inside decays are expanded
/// bottom-up. The alternatives of the leftmost bracket vary slowest and the
/// sign of each produced group is the product of the signs involved.
FinalState expand_groups(const FinalState& fs);
Reaction expand_groups(const Reaction& r);

/// Merges decay-free nodes with equal names inside each sequence into one
/// node carrying the summed count. Nodes with decays are left alone.
Reaction merge_duplicates(const Reaction& r);

std::weak_ordering compare_names(std::string_view a, std::string_view b,
                                 OrderingMode mode, const Dictionary& dict);

/// Total orders used by sort_reaction. Nodes compare by name, then count,
/// then decay (none first). Groups compare by sign (+1 first), then
/// elementwise over their particles with a shorter prefix first.
std::weak_ordering compare_nodes(const ParticleNode& a, const ParticleNode& b,
                                 OrderingMode mode, const Dictionary& dict);
std::weak_ordering compare_groups(const GroupNode& a, const GroupNode& b,
                                  OrderingMode mode, const Dictionary& dict);

/// Stable sort of every sequence and group list, innermost decays first.
Reaction sort_reaction(const Reaction& r, OrderingMode mode,
                       const Dictionary& dict);

/// resolve_synonyms, expand_groups, merge_duplicates, sort_reaction.
Reaction canonicalize(const Reaction& r, OrderingMode mode,
                      const Dictionary& dict);

}  // namespace reacproc
