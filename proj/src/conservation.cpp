#include "reacproc/conservation.hpp"

#include <algorithm>

namespace reacproc {

std::vector<Law> default_laws() {
  return {
      {"charge", Component::kCharge},    {"baryon", Component::kBaryon},
      {"S", Component::kStrangeness},    {"C", Component::kCharm},
      {"B", Component::kBottomness},     {"T", Component::kTopness},
      {"Le", Component::kLe},            {"Lmu", Component::kLmu},
      {"Ltau", Component::kLtau},
  };
}

std::optional<Law> find_law(std::string_view name) {
  for (auto& law : default_laws())
    if (law.name == name) return law;
  return std::nullopt;
}

bool satisfies(int initial_sum, int final_sum, Relation relation) {
  switch (relation) {
    case Relation::kEqual: return initial_sum == final_sum;
    case Relation::kLessEqual: return initial_sum <= final_sum;
    case Relation::kGreaterEqual: return initial_sum >= final_sum;
  }
  return false;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kAccept: return "ACCEPT";
    case Status::kReject: return "REJECT";
    case Status::kUnknown: return "UNKNOWN";
  }
  return "?";
}

std::variant<int, UnknownParticle> state_sum(const ParticleSequence& seq,
                                             Component component,
                                             const PropertyTable& table) {
  int sum = 0;
  for (const auto& node : seq) {
    const QuantumVector* v = table.find(node.name);
    if (v == nullptr) return UnknownParticle{node.name};
    sum += node.count * (*v)[component];
  }
  return sum;
}

namespace {

class LawChecker {
 public:
  LawChecker(const Law& law, const PropertyTable& table)
      : law_(law), table_(table) {}

  LawResult run(const Reaction& r) {
    auto initial = state_sum(r.initial, law_.component, table_);
    if (auto* u = std::get_if<UnknownParticle>(&initial)) {
      result_.unknown = u->name;
      return std::move(result_);
    }
    const auto& groups = r.final_state.groups;
    for (std::size_t i = 0; i < groups.size() && !result_.unknown; ++i) {
      const std::string where = "final[" + std::to_string(i) + "]";
      check_group(std::get<int>(initial), groups[i].particles, where);
    }
    return std::move(result_);
  }

 private:
  // Compares `expected` against the group's sum, then descends into the
  // decays of the group's particles.
  void check_group(int expected, const ParticleSequence& seq,
                   const std::string& where) {
    auto sum = state_sum(seq, law_.component, table_);
    if (auto* u = std::get_if<UnknownParticle>(&sum)) {
      result_.unknown = u->name;
      return;
    }
    if (!satisfies(expected, std::get<int>(sum), law_.relation))
      result_.violations.push_back(
          {law_.name, where, expected, std::get<int>(sum)});

    for (const auto& node : seq) {
      if (!node.has_decay()) continue;
      const int parent = (*table_.find(node.name))[law_.component];
      const auto& decay = node.decay->groups;
      for (std::size_t i = 0; i < decay.size() && !result_.unknown; ++i)
        check_group(parent, decay[i].particles,
                    where + "." + node.name + ".decay[" + std::to_string(i) + "]");
      if (result_.unknown) return;
    }
  }

  const Law& law_;
  const PropertyTable& table_;
  LawResult result_;
};

void collect_unknown(const ParticleSequence& seq, const PropertyTable& table,
                     std::vector<std::string>& out) {
  for (const auto& node : seq) {
    if (!table.contains(node.name) &&
        std::find(out.begin(), out.end(), node.name) == out.end())
      out.push_back(node.name);
    if (node.has_decay())
      for (const auto& g : node.decay->groups)
        collect_unknown(g.particles, table, out);
  }
}

}  // namespace

LawResult test_reaction(const Reaction& r, const Law& law,
                        const PropertyTable& table) {
  return LawChecker(law, table).run(r);
}

std::vector<std::string> unknown_names(const Reaction& r,
                                       const PropertyTable& table) {
  std::vector<std::string> out;
  collect_unknown(r.initial, table, out);
  for (const auto& g : r.final_state.groups)
    collect_unknown(g.particles, table, out);
  return out;
}

Verdict check_all_laws(const Reaction& r, const std::vector<Law>& laws,
                       const PropertyTable& table) {
  Verdict verdict;
  for (const auto& law : laws) {
    LawResult result = test_reaction(r, law, table);
    if (result.unknown) {
      verdict.status = Status::kUnknown;
      verdict.violations.clear();
      verdict.unknown_names = unknown_names(r, table);
      return verdict;
    }
    verdict.violations.insert(verdict.violations.end(),
                              std::make_move_iterator(result.violations.begin()),
                              std::make_move_iterator(result.violations.end()));
  }
  if (!verdict.violations.empty()) verdict.status = Status::kReject;
  return verdict;
}

}  // namespace reacproc
