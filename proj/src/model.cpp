#include "reacproc/model.hpp"

#include "reacproc/lexer.hpp"

namespace reacproc {

ParticleNode::ParticleNode() = default;

ParticleNode::ParticleNode(std::string name, int count)
    : name(std::move(name)), count(count) {}

ParticleNode::ParticleNode(std::string name, FinalState decay)
    : name(std::move(name)),
      count(1),
      decay(std::make_unique<FinalState>(std::move(decay))) {}

ParticleNode::ParticleNode(const ParticleNode& other)
    : name(other.name),
      count(other.count),
      decay(other.decay ? std::make_unique<FinalState>(*other.decay)
                        : nullptr) {}

ParticleNode::ParticleNode(ParticleNode&& other) noexcept = default;

ParticleNode& ParticleNode::operator=(const ParticleNode& other) {
  if (this != &other) {
    ParticleNode copy(other);
    *this = std::move(copy);
  }
  return *this;
}

ParticleNode& ParticleNode::operator=(ParticleNode&& other) noexcept = default;

ParticleNode::~ParticleNode() = default;

bool operator==(const ParticleNode& a, const ParticleNode& b) {
  if (a.name != b.name || a.count != b.count) return false;
  if (a.has_decay() != b.has_decay()) return false;
  return !a.has_decay() || *a.decay == *b.decay;
}

ParticleNode make_compo(FinalState alternatives) {
  ParticleNode node(std::string(kCompoName), std::move(alternatives));
  node.count = 0;
  return node;
}

Reaction deep_copy(const Reaction& r) { return r; }

bool structural_equal(const Reaction& a, const Reaction& b) { return a == b; }

namespace {

void validate_sequence(const ParticleSequence& seq, const std::string& where);

void validate_final_state(const FinalState& fs, const std::string& where,
                          bool top_level) {
  if (fs.groups.empty()) throw ModelError(where + ": final state has no groups");
  if (fs.cc && !top_level)
    throw ModelError(where + ": CC marker below the reaction's final state");
  if (fs.groups.front().sign != Sign::kPlus)
    throw ModelError(where + ": first group must carry sign +1");
  for (std::size_t i = 0; i < fs.groups.size(); ++i) {
    const Sign s = fs.groups[i].sign;
    if (s != Sign::kPlus && s != Sign::kMinus)
      throw ModelError(where + ": group sign out of range");
    validate_sequence(fs.groups[i].particles,
                      where + "[" + std::to_string(i) + "]");
  }
}

void validate_sequence(const ParticleSequence& seq, const std::string& where) {
  for (const auto& node : seq) {
    if (node.is_compo()) {
      if (node.count != 0)
        throw ModelError(where + ": grouping node must have count 0");
      if (!node.has_decay())
        throw ModelError(where + ": grouping node without alternatives");
    } else {
      if (!is_valid_particle_name(node.name))
        throw ModelError(where + ": invalid particle name '" + node.name + "'");
      if (node.count < 1)
        throw ModelError(where + ": particle '" + node.name +
                         "' has non-positive count");
    }
    if (node.has_decay())
      validate_final_state(*node.decay, where + "." + node.name, false);
  }
}

}  // namespace

void validate(const Reaction& r) {
  if (r.initial.empty()) throw ModelError("initial state has no beam");
  for (const auto& node : r.initial) {
    if (node.is_compo())
      throw ModelError("grouping brackets are not allowed in the initial state");
    if (node.has_decay())
      throw ModelError("initial-state particle '" + node.name +
                       "' carries a decay");
  }
  validate_sequence(r.initial, "initial");
  validate_final_state(r.final_state, "final", true);
}

namespace {

FinalState expand_counts(const FinalState& fs);

ParticleSequence expand_counts(const ParticleSequence& seq) {
  ParticleSequence out;
  out.reserve(seq.size());
  for (const auto& node : seq) {
    if (node.is_compo() || node.count <= 1) {
      ParticleNode copy(node.name, node.count);
      if (node.has_decay())
        copy.decay = std::make_unique<FinalState>(expand_counts(*node.decay));
      out.push_back(std::move(copy));
      continue;
    }
    for (int i = 0; i < node.count; ++i) {
      ParticleNode copy(node.name, 1);
      if (node.has_decay())
        copy.decay = std::make_unique<FinalState>(expand_counts(*node.decay));
      out.push_back(std::move(copy));
    }
  }
  return out;
}

FinalState expand_counts(const FinalState& fs) {
  FinalState out;
  out.cc = fs.cc;
  for (const auto& g : fs.groups)
    out.groups.push_back({g.sign, expand_counts(g.particles)});
  return out;
}

std::size_t count_compo(const ParticleSequence& seq) {
  std::size_t n = 0;
  for (const auto& node : seq) {
    if (node.is_compo()) ++n;
    if (node.has_decay()) n += count_compo(*node.decay);
  }
  return n;
}

}  // namespace

Reaction expand_counts(const Reaction& r) {
  return {expand_counts(r.initial), expand_counts(r.final_state)};
}

std::size_t count_compo(const FinalState& fs) {
  std::size_t n = 0;
  for (const auto& g : fs.groups) n += count_compo(g.particles);
  return n;
}

std::size_t count_compo(const Reaction& r) {
  return count_compo(r.initial) + count_compo(r.final_state);
}

}  // namespace reacproc
