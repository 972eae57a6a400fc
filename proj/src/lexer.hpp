#pragma once

// Tokenizer shared by the group and quandle presentation grammars.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qf/errors.hpp"

namespace qf::detail {

enum class Tok {
  Ident,
  Int,
  Star,       // *
  StarMinus,  // *-
  StarCaret,  // *^
  Caret,      // ^
  Minus,      // -
  LParen,
  RParen,
  Eq,
  Comma,
  Bar,
  LAngle,
  RAngle,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(Tok kind);

class Lexer {
 public:
  explicit Lexer(std::string_view text);

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  /// Consumes a token of the given kind or throws ParseError.
  Token expect(Tok kind);
  bool accept(Tok kind);

  [[noreturn]] void fail(std::vector<std::string> expected) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace qf::detail
