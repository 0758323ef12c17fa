#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reacproc {

enum class TokenKind {
  kArrow,     // "-->"
  kEnd,       // ";"
  kLParen,    // "("
  kRParen,    // ")"
  kLAngle,    // "<"
  kRAngle,    // ">"
  kPlus,      // "+"
  kMinus,     // "-"
  kCC,        // "CC"
  kParticle,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  /// Byte offset of the lexeme in the tokenized text.
  std::size_t offset;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Raised for any statement the grammar does not accept.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset,
             std::vector<TokenKind> expected = {});

  std::size_t offset() const { return offset_; }
  const std::vector<TokenKind>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<TokenKind> expected_;
};

/// A character that no token rule matches.
class LexError : public ParseError {
 public:
  LexError(char c, std::size_t offset);
};

/// Characters allowed inside a PARTICLE lexeme: letters, digits and
/// + - : " . * = % _ ( ) /
bool is_particle_char(char c);

/// True when `name` tokenizes, standing alone, to exactly one PARTICLE.
bool is_valid_particle_name(std::string_view name);

/// Maximal-munch tokenizer. Whitespace (space, tab, CR, LF) is discarded;
/// on equal match length the fixed tokens win over PARTICLE.
std::vector<Token> tokenize(std::string_view text);

}  // namespace reacproc
