#include "reacproc/render.hpp"

#include <ostream>

namespace reacproc {

namespace {

class Writer {
 public:
  void token(std::string_view t) {
    if (!out_.empty()) out_ += ' ';
    out_ += t;
  }

  void sequence(const ParticleSequence& seq) {
    for (const auto& node : seq) {
      if (node.is_compo()) {
        token("(");
        final_state(*node.decay);
        token(")");
        continue;
      }
      for (int i = 0; i < node.count; ++i) {
        token(node.name);
        if (node.has_decay()) {
          token("<");
          final_state(*node.decay);
          token(">");
        }
      }
    }
  }

  void final_state(const FinalState& fs) {
    for (std::size_t i = 0; i < fs.groups.size(); ++i) {
      const auto& g = fs.groups[i];
      if (i > 0 || g.sign == Sign::kMinus)
        token(g.sign == Sign::kPlus ? "+" : "-");
      sequence(g.particles);
    }
    if (fs.cc) {
      token("+");
      token("CC");
    }
  }

  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

}  // namespace

std::string render_reaction(const Reaction& r) {
  Writer w;
  w.sequence(r.initial);
  w.token("-->");
  w.final_state(r.final_state);
  w.token(";");
  return w.take();
}

std::string render_final_state(const FinalState& fs) {
  Writer w;
  w.final_state(fs);
  return w.take();
}

void out_to(std::ostream& os, const Reaction& r) { os << render_reaction(r); }

}  // namespace reacproc
