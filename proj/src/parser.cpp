#include "reacproc/parser.hpp"

#include <initializer_list>

namespace reacproc {

namespace {

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t text_size)
      : tokens_(std::move(tokens)), text_size_(text_size) {}

  Reaction parse_statement() {
    Reaction r;
    const Token& beam = expect(TokenKind::kParticle, "a beam particle");
    r.initial.emplace_back(beam.text);
    while (peek_is(TokenKind::kParticle)) r.initial.emplace_back(next().text);
    expect_one_of({TokenKind::kParticle, TokenKind::kArrow}, TokenKind::kArrow,
                  "'-->' after the initial state");
    r.final_state = parse_final_state(true);
    expect(TokenKind::kEnd, "';' at the end of the reaction");
    if (!at_end()) fail("unexpected text after ';'", {});
    return r;
  }

 private:
  FinalState parse_final_state(bool top_level) {
    FinalState fs;
    fs.groups.push_back({Sign::kPlus, parse_decay_group()});
    for (;;) {
      if (peek_is(TokenKind::kPlus) && peek_is(TokenKind::kCC, 1)) {
        if (!top_level)
          fail("CC marker is only allowed on the reaction's final state", {});
        pos_ += 2;
        fs.cc = true;
        continue;
      }
      if (fs.cc) {
        // After "+ CC" the grammar only allows further "+ CC".
        if (peek_is(TokenKind::kPlus) || peek_is(TokenKind::kMinus))
          fail("expected CC after '+' following a CC marker", {TokenKind::kCC});
        break;
      }
      if (peek_is(TokenKind::kPlus)) {
        ++pos_;
        fs.groups.push_back({Sign::kPlus, parse_decay_group()});
      } else if (peek_is(TokenKind::kMinus)) {
        ++pos_;
        fs.groups.push_back({Sign::kMinus, parse_decay_group()});
      } else {
        break;
      }
    }
    return fs;
  }

  ParticleSequence parse_decay_group() {
    ParticleSequence seq;
    for (;;) {
      if (peek_is(TokenKind::kParticle)) {
        std::string name = next().text;
        if (peek_is(TokenKind::kLAngle)) {
          ++pos_;
          FinalState decay = parse_final_state(false);
          expect(TokenKind::kRAngle, "'>' closing the decay of " + name);
          seq.emplace_back(std::move(name), std::move(decay));
        } else {
          seq.emplace_back(std::move(name));
        }
      } else if (peek_is(TokenKind::kLParen)) {
        ++pos_;
        FinalState alternatives = parse_final_state(false);
        expect(TokenKind::kRParen, "')' closing the grouping bracket");
        seq.push_back(make_compo(std::move(alternatives)));
      } else {
        return seq;
      }
    }
  }

  bool at_end() const { return pos_ >= tokens_.size(); }

  bool peek_is(TokenKind kind, std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() && tokens_[pos_ + ahead].kind == kind;
  }

  const Token& next() { return tokens_[pos_++]; }

  const Token& expect(TokenKind kind, const std::string& what) {
    return expect_one_of({kind}, kind, what);
  }

  // `expected` lists every kind that would have been accepted here, for
  // the error report; only `kind` is consumed.
  const Token& expect_one_of(std::initializer_list<TokenKind> expected,
                             TokenKind kind, const std::string& what) {
    if (!peek_is(kind)) fail("expected " + what, expected);
    return next();
  }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<TokenKind> expected) const {
    std::size_t offset = at_end() ? text_size_ : tokens_[pos_].offset;
    std::string found =
        at_end() ? "end of input" : "'" + tokens_[pos_].text + "'";
    throw ParseError(message + ", found " + found + " at offset " +
                         std::to_string(offset),
                     offset, std::move(expected));
  }

  std::vector<Token> tokens_;
  std::size_t text_size_;
  std::size_t pos_ = 0;
};

ParseError shifted(const ParseError& e, std::size_t base) {
  return ParseError(e.what(), e.offset() + base, e.expected());
}

}  // namespace

Reaction parse_reaction(std::string_view text) {
  Parser parser(tokenize(text), text.size());
  return parser.parse_statement();
}

std::vector<ParseOutcome> parse_script(std::string_view text) {
  std::vector<ParseOutcome> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find(';', start);
    const std::size_t stop = end == std::string_view::npos ? text.size() : end + 1;
    const std::string_view chunk = text.substr(start, stop - start);
    if (chunk.find_first_not_of(" \t\r\n") == std::string_view::npos) break;
    try {
      out.emplace_back(parse_reaction(chunk));
    } catch (const ParseError& e) {
      out.emplace_back(shifted(e, start));
    }
    start = stop;
  }
  return out;
}

}  // namespace reacproc
