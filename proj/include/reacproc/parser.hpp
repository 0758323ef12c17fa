#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "reacproc/lexer.hpp"
#include "reacproc/model.hpp"

namespace reacproc {

/// Parses one statement ("initial --> final ;") into a reaction tree.
///
///   reaction      := initial_state ARROW final_state END
///   initial_state := PARTICLE PARTICLE*
///   final_state   := decay_group (("+" | "-") decay_group)* ("+" CC)*
///   decay_group   := particle*
///   particle      := PARTICLE | PARTICLE "<" final_state ">"
///                  | "(" final_state ")"
///
/// A parenthesized final state becomes a "?compo" node. The CC marker is
/// accepted only on the reaction's own final state. Throws ParseError.
Reaction parse_reaction(std::string_view text);

using ParseOutcome = std::variant<Reaction, ParseError>;

/// Parses a sequence of statements. A statement that fails is skipped up to
/// and including its END and reported in place; parsing resumes after it.
/// Offsets in reported errors are relative to `text`.
std::vector<ParseOutcome> parse_script(std::string_view text);

}  // namespace reacproc
