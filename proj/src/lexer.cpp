#include "reacproc/lexer.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace reacproc {

namespace {

struct FixedRule {
  std::string_view lexeme;
  TokenKind kind;
};

// Listed in priority order for ties.
constexpr std::array<FixedRule, 9> kFixedRules = {{
    {"-->", TokenKind::kArrow},
    {";", TokenKind::kEnd},
    {"(", TokenKind::kLParen},
    {")", TokenKind::kRParen},
    {"<", TokenKind::kLAngle},
    {">", TokenKind::kRAngle},
    {"+", TokenKind::kPlus},
    {"-", TokenKind::kMinus},
    {"CC", TokenKind::kCC},
}};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string describe_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (std::isprint(u)) return std::string("'") + c + "'";
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("byte 0x") + kHex[u >> 4] + kHex[u & 0xf];
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kArrow: return "ARROW";
    case TokenKind::kEnd: return "END";
    case TokenKind::kLParen: return "LP";
    case TokenKind::kRParen: return "RP";
    case TokenKind::kLAngle: return "LC";
    case TokenKind::kRAngle: return "RC";
    case TokenKind::kPlus: return "PLUS";
    case TokenKind::kMinus: return "MINUS";
    case TokenKind::kCC: return "CC";
    case TokenKind::kParticle: return "PARTICLE";
  }
  return "?";
}

ParseError::ParseError(const std::string& message, std::size_t offset,
                       std::vector<TokenKind> expected)
    : std::runtime_error(message),
      offset_(offset),
      expected_(std::move(expected)) {}

LexError::LexError(char c, std::size_t offset)
    : ParseError("unexpected character " + describe_char(c) + " at offset " +
                     std::to_string(offset),
                 offset) {}

bool is_particle_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x80) return false;
  if (std::isalnum(u)) return true;
  switch (c) {
    case '+': case '-': case ':': case '"': case '.': case '*':
    case '=': case '%': case '_': case '(': case ')': case '/':
      return true;
    default:
      return false;
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t particle_len = 0;
    while (pos + particle_len < text.size() &&
           is_particle_char(text[pos + particle_len]))
      ++particle_len;

    const FixedRule* fixed = nullptr;
    for (const auto& rule : kFixedRules) {
      if (text.substr(pos, rule.lexeme.size()) == rule.lexeme &&
          (fixed == nullptr || rule.lexeme.size() > fixed->lexeme.size()))
        fixed = &rule;
    }

    if (fixed != nullptr && fixed->lexeme.size() >= particle_len) {
      tokens.push_back({fixed->kind, std::string(fixed->lexeme), pos});
      pos += fixed->lexeme.size();
    } else if (particle_len > 0) {
      tokens.push_back(
          {TokenKind::kParticle, std::string(text.substr(pos, particle_len)), pos});
      pos += particle_len;
    } else {
      throw LexError(text[pos], pos);
    }
  }
  return tokens;
}

bool is_valid_particle_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name)
    if (!is_particle_char(c)) return false;
  for (const auto& rule : kFixedRules)
    if (name == rule.lexeme) return false;
  return true;
}

}  // namespace reacproc
