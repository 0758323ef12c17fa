#include "reacproc/canonical.hpp"

#include <algorithm>

namespace reacproc {

namespace {

// -- synonyms ---------------------------------------------------------------

void resolve_in(ParticleSequence& seq, const Dictionary& dict);

void resolve_in(FinalState& fs, const Dictionary& dict) {
  for (auto& g : fs.groups) resolve_in(g.particles, dict);
}

void resolve_in(ParticleSequence& seq, const Dictionary& dict) {
  for (auto& node : seq) {
    if (!node.is_compo()) {
      std::string_view key = dict.resolve(node.name);
      if (key != node.name) node.name = std::string(key);
    }
    if (node.has_decay()) resolve_in(*node.decay, dict);
  }
}

// -- bracket expansion --------------------------------------------------------

// One slot of a group being distributed: either a plain node (one choice)
// or the expanded alternatives of a grouping node.
struct Slot {
  const ParticleNode* node = nullptr;
  FinalState alternatives;
};

ParticleNode expand_node(const ParticleNode& node) {
  ParticleNode out(node.name, node.count);
  if (node.has_decay())
    out.decay = std::make_unique<FinalState>(expand_groups(*node.decay));
  return out;
}

void expand_group(const GroupNode& group, std::vector<GroupNode>& out) {
  std::vector<Slot> slots;
  slots.reserve(group.particles.size());
  std::vector<std::size_t> radix;
  for (const auto& node : group.particles) {
    Slot slot;
    if (node.is_compo()) {
      slot.alternatives = expand_groups(*node.decay);
      radix.push_back(slot.alternatives.groups.size());
    } else {
      slot.node = &node;
    }
    slots.push_back(std::move(slot));
  }

  // Odometer over the alternative indices; the last bracket turns fastest.
  std::vector<std::size_t> choice(radix.size(), 0);
  for (;;) {
    GroupNode produced{group.sign, {}};
    std::size_t k = 0;
    for (const auto& slot : slots) {
      if (slot.node != nullptr) {
        produced.particles.push_back(expand_node(*slot.node));
        continue;
      }
      const GroupNode& alt = slot.alternatives.groups[choice[k++]];
      produced.sign = produced.sign * alt.sign;
      produced.particles.insert(produced.particles.end(), alt.particles.begin(),
                                alt.particles.end());
    }
    out.push_back(std::move(produced));

    std::size_t i = choice.size();
    while (i > 0) {
      --i;
      if (++choice[i] < radix[i]) break;
      choice[i] = 0;
      if (i == 0) return;
    }
    if (choice.empty()) return;
  }
}

// -- merging ----------------------------------------------------------------

void merge_in(ParticleSequence& seq);

void merge_in(FinalState& fs) {
  for (auto& g : fs.groups) merge_in(g.particles);
}

void merge_in(ParticleSequence& seq) {
  ParticleSequence out;
  out.reserve(seq.size());
  for (auto& node : seq) {
    if (node.has_decay()) {
      merge_in(*node.decay);
      out.push_back(std::move(node));
      continue;
    }
    auto same = std::find_if(out.begin(), out.end(), [&](const ParticleNode& n) {
      return !n.has_decay() && n.name == node.name;
    });
    if (same != out.end()) {
      same->count += node.count;
    } else {
      out.push_back(std::move(node));
    }
  }
  seq = std::move(out);
}

// -- ordering ----------------------------------------------------------------

std::weak_ordering compare_final_states(const FinalState& a, const FinalState& b,
                                        OrderingMode mode, const Dictionary& dict) {
  const std::size_t n = std::min(a.groups.size(), b.groups.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare_groups(a.groups[i], b.groups[i], mode, dict);
    if (c != 0) return c;
  }
  if (a.groups.size() != b.groups.size())
    return a.groups.size() <=> b.groups.size();
  return a.cc <=> b.cc;
}

void sort_in(ParticleSequence& seq, OrderingMode mode, const Dictionary& dict);

void sort_in(FinalState& fs, OrderingMode mode, const Dictionary& dict) {
  for (auto& g : fs.groups) sort_in(g.particles, mode, dict);
  std::stable_sort(fs.groups.begin(), fs.groups.end(),
                   [&](const GroupNode& a, const GroupNode& b) {
                     return compare_groups(a, b, mode, dict) < 0;
                   });
}

void sort_in(ParticleSequence& seq, OrderingMode mode, const Dictionary& dict) {
  for (auto& node : seq)
    if (node.has_decay()) sort_in(*node.decay, mode, dict);
  std::stable_sort(seq.begin(), seq.end(),
                   [&](const ParticleNode& a, const ParticleNode& b) {
                     return compare_nodes(a, b, mode, dict) < 0;
                   });
}

}  // namespace

Reaction resolve_synonyms(const Reaction& r, const Dictionary& dict) {
  Reaction out = r;
  resolve_in(out.initial, dict);
  resolve_in(out.final_state, dict);
  return out;
}

FinalState expand_groups(const FinalState& fs) {
  FinalState out;
  out.cc = fs.cc;
  for (const auto& g : fs.groups) expand_group(g, out.groups);
  return out;
}

Reaction expand_groups(const Reaction& r) {
  return {r.initial, expand_groups(r.final_state)};
}

Reaction merge_duplicates(const Reaction& r) {
  Reaction out = r;
  merge_in(out.initial);
  merge_in(out.final_state);
  return out;
}

std::weak_ordering compare_names(std::string_view a, std::string_view b,
                                 OrderingMode mode, const Dictionary& dict) {
  if (mode == OrderingMode::kDict) {
    auto ra = dict.rank(a);
    auto rb = dict.rank(b);
    if (ra && rb) {
      if (*ra != *rb) return *ra <=> *rb;
      // Two synonyms of one entry: fall through to bytewise.
    } else if (ra) {
      return std::weak_ordering::less;
    } else if (rb) {
      return std::weak_ordering::greater;
    }
  }
  // std::string_view compares through char_traits<char>, which orders as
  // unsigned char: plain byte order.
  const int c = a.compare(b);
  return c < 0 ? std::weak_ordering::less
               : c > 0 ? std::weak_ordering::greater : std::weak_ordering::equivalent;
}

std::weak_ordering compare_nodes(const ParticleNode& a, const ParticleNode& b,
                                 OrderingMode mode, const Dictionary& dict) {
  if (auto c = compare_names(a.name, b.name, mode, dict); c != 0) return c;
  if (a.count != b.count) return a.count <=> b.count;
  if (a.has_decay() != b.has_decay()) return a.has_decay() <=> b.has_decay();
  if (!a.has_decay()) return std::weak_ordering::equivalent;
  return compare_final_states(*a.decay, *b.decay, mode, dict);
}

std::weak_ordering compare_groups(const GroupNode& a, const GroupNode& b,
                                  OrderingMode mode, const Dictionary& dict) {
  if (a.sign != b.sign)
    return a.sign == Sign::kPlus ? std::weak_ordering::less
                                 : std::weak_ordering::greater;
  const std::size_t n = std::min(a.particles.size(), b.particles.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare_nodes(a.particles[i], b.particles[i], mode, dict);
    if (c != 0) return c;
  }
  return a.particles.size() <=> b.particles.size();
}

Reaction sort_reaction(const Reaction& r, OrderingMode mode,
                       const Dictionary& dict) {
  Reaction out = r;
  sort_in(out.initial, mode, dict);
  sort_in(out.final_state, mode, dict);
  return out;
}

Reaction canonicalize(const Reaction& r, OrderingMode mode,
                      const Dictionary& dict) {
  Reaction out = resolve_synonyms(r, dict);
  out = expand_groups(out);
  out = merge_duplicates(out);
  return sort_reaction(out, mode, dict);
}

}  // namespace reacproc
