#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reacproc {

/// Name of the synthetic node that stands for a parenthesized group
/// "( A + B )". Its count is 0 and its decay holds the alternatives.
inline constexpr std::string_view kCompoName = "?compo";

enum class Sign : int { kPlus = 1, kMinus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::kPlus : Sign::kMinus;
}

struct FinalState;

/// One particle species occurrence inside a sequence.
struct ParticleNode {
  std::string name;
  int count = 1;
  /// Decay description, null when the particle has none.
  std::unique_ptr<FinalState> decay;

  ParticleNode();
  explicit ParticleNode(std::string name, int count = 1);
  ParticleNode(std::string name, FinalState decay);
  ParticleNode(const ParticleNode& other);
  ParticleNode(ParticleNode&& other) noexcept;
  ParticleNode& operator=(const ParticleNode& other);
  ParticleNode& operator=(ParticleNode&& other) noexcept;
  ~ParticleNode();

  bool is_compo() const { return name == kCompoName; }
  bool has_decay() const { return decay != nullptr; }

  friend bool operator==(const ParticleNode& a, const ParticleNode& b);
};

using ParticleSequence = std::vector<ParticleNode>;

/// A signed alternative: one particle sequence joined to its neighbours
/// with "+" or "-".
struct GroupNode {
  Sign sign = Sign::kPlus;
  ParticleSequence particles;

  friend bool operator==(const GroupNode&, const GroupNode&) = default;
};

struct FinalState {
  std::vector<GroupNode> groups;
  /// Charge-conjugate marker ("+ CC"); only set on a reaction's final state.
  bool cc = false;

  friend bool operator==(const FinalState&, const FinalState&) = default;
};

struct Reaction {
  /// Beam first, then targets.
  ParticleSequence initial;
  FinalState final_state;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

class ModelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Builds the synthetic grouping node for "( alternatives )".
ParticleNode make_compo(FinalState alternatives);

Reaction deep_copy(const Reaction& r);

/// Node-for-node equality including order, signs, counts and cc flags.
bool structural_equal(const Reaction& a, const Reaction& b);

/// Throws ModelError describing the first broken invariant.
void validate(const Reaction& r);

/// Replaces every node with count k > 1 by k copies with count 1, recursively.
Reaction expand_counts(const Reaction& r);

/// Number of "?compo" nodes anywhere in the tree.
std::size_t count_compo(const Reaction& r);
std::size_t count_compo(const FinalState& fs);

}  // namespace reacproc
