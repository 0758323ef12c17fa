#pragma once

#include <iosfwd>
#include <string>

#include "reacproc/model.hpp"

namespace reacproc {

/// Renders a reaction as statement text with single spaces between tokens,
/// e.g. "e+ e- --> W+ < e+ nu(e) + mu+ nu(mu) > W- ;". Counts above one
/// are written as repeated names; "?compo" nodes as "( ... )".
std::string render_reaction(const Reaction& r);
std::string render_final_state(const FinalState& fs);

void out_to(std::ostream& os, const Reaction& r);

}  // namespace reacproc
