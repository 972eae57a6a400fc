#include "lexer.hpp"

#include <cctype>

namespace qf {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& found)
    : UsageError("ParseError at line " + std::to_string(line) + ", column " +
                 std::to_string(column) + ": expected " + join_expected(expected) +
                 " but found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace qf

namespace qf::detail {

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Star: return "'*'";
    case Tok::StarMinus: return "'*-'";
    case Tok::StarCaret: return "'*^'";
    case Tok::Caret: return "'^'";
    case Tok::Minus: return "'-'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Eq: return "'='";
    case Tok::Comma: return "','";
    case Tok::Bar: return "'|'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

Lexer::Lexer(std::string_view text) {
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    tokens_.push_back(Token{kind, std::string(text.substr(i, len)), line, col});
    i += len;
    col += len;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t len = 1;
      while (i + len < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + len])) || text[i + len] == '_'))
        ++len;
      push(Tok::Ident, len);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t len = 1;
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len])))
        ++len;
      push(Tok::Int, len);
      continue;
    }
    if (ch == '*') {
      if (i + 1 < text.size() && text[i + 1] == '-') {
        push(Tok::StarMinus, 2);
      } else if (i + 1 < text.size() && text[i + 1] == '^') {
        push(Tok::StarCaret, 2);
      } else {
        push(Tok::Star, 1);
      }
      continue;
    }
    Tok kind;
    switch (ch) {
      case '^': kind = Tok::Caret; break;
      case '-': kind = Tok::Minus; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '=': kind = Tok::Eq; break;
      case ',': kind = Tok::Comma; break;
      case '|': kind = Tok::Bar; break;
      case '<': kind = Tok::LAngle; break;
      case '>': kind = Tok::RAngle; break;
      default:
        throw ParseError(line, col, {"a token"}, "'" + std::string(1, ch) + "'");
    }
    push(kind, 1);
  }
  tokens_.push_back(Token{Tok::End, "", line, col});
}

Token Lexer::expect(Tok kind) {
  if (!at(kind)) fail({describe(kind)});
  return next();
}

bool Lexer::accept(Tok kind) {
  if (!at(kind)) return false;
  next();
  return true;
}

void Lexer::fail(std::vector<std::string> expected) const {
  const Token& t = peek();
  const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(t.line, t.column, std::move(expected), found);
}

}  // namespace qf::detail
