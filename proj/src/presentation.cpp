#include "qf/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lexer.hpp"
#include "qf/errors.hpp"

namespace qf {

QuandleTerm QuandleTerm::generator(std::string name) {
  auto n = std::make_shared<Node>();
  n->name = std::move(name);
  return QuandleTerm(std::move(n));
}

QuandleTerm QuandleTerm::apply(QuandleTerm left, QuandleTerm right, std::int64_t exponent) {
  auto n = std::make_shared<Node>();
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  n->exponent = exponent;
  return QuandleTerm(std::move(n));
}

bool QuandleTerm::mentions(std::string_view generator) const {
  if (is_generator()) return node_->name == generator;
  return left().mentions(generator) || right().mentions(generator);
}

QuandleTerm QuandleTerm::substitute(std::string_view generator, const QuandleTerm& value) const {
  if (!mentions(generator)) return *this;
  if (is_generator()) return value;
  return apply(left().substitute(generator, value), right().substitute(generator, value),
               exponent());
}

bool QuandleTerm::operator==(const QuandleTerm& other) const {
  if (node_ == other.node_) return true;
  if (is_generator() != other.is_generator()) return false;
  if (is_generator()) return name() == other.name();
  return exponent() == other.exponent() && left() == other.left() && right() == other.right();
}

std::string to_string(const QuandleTerm& t) {
  if (t.is_generator()) return t.name();
  auto operand = [](const QuandleTerm& s) {
    return s.is_generator() ? to_string(s) : "(" + to_string(s) + ")";
  };
  std::string op;
  if (t.exponent() == 1) {
    op = "*";
  } else if (t.exponent() == -1) {
    op = "*-";
  } else {
    op = "*^" + std::to_string(t.exponent()) + " ";
  }
  return operand(t.left()) + op + operand(t.right());
}

QuandlePresentation::QuandlePresentation(std::vector<std::string> generators,
                                         std::vector<QuandleRelation> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  if (generators_.empty()) throw InvalidArgument("a presentation needs at least one generator");
  std::set<std::string> seen;
  for (const auto& g : generators_)
    if (!seen.insert(g).second) throw InvalidArgument("duplicate generator '" + g + "'");
  auto check = [&](auto&& self, const QuandleTerm& t) -> void {
    if (t.is_generator()) {
      if (!seen.contains(t.name()))
        throw InvalidArgument("relation mentions undeclared generator '" + t.name() + "'");
      return;
    }
    self(self, t.left());
    self(self, t.right());
  };
  for (const auto& r : relations_) {
    check(check, r.lhs);
    check(check, r.rhs);
  }
}

std::size_t QuandlePresentation::generator_index(std::string_view name) const {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw InvalidArgument("unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - generators_.begin());
}

namespace {

using detail::Lexer;
using detail::Tok;

class QuandleParser {
 public:
  explicit QuandleParser(std::string_view text) : lex_(text) {}

  QuandlePresentation parse() {
    if (!lex_.at(Tok::Ident) || lex_.peek().text != "quandle") lex_.fail({"'quandle'"});
    lex_.next();
    lex_.expect(Tok::LAngle);
    do {
      if (!lex_.at(Tok::Ident)) lex_.fail({"generator name"});
      if (std::find(gens_.begin(), gens_.end(), lex_.peek().text) != gens_.end())
        lex_.fail({"a generator name not already declared"});
      gens_.push_back(lex_.next().text);
    } while (lex_.accept(Tok::Comma));
    lex_.expect(Tok::Bar);
    std::vector<QuandleRelation> relations;
    if (!lex_.at(Tok::RAngle)) {
      do {
        QuandleTerm lhs = term();
        if (!lex_.at(Tok::Eq)) lex_.fail({"'*'", "'*-'", "'*^'", "'='"});
        lex_.next();
        QuandleTerm rhs = term();
        relations.push_back({std::move(lhs), std::move(rhs)});
      } while (lex_.accept(Tok::Comma));
    }
    if (!lex_.at(Tok::RAngle)) lex_.fail({"'*'", "'*-'", "'*^'", "','", "'>'"});
    lex_.next();
    if (!lex_.at(Tok::End)) lex_.fail({"end of input"});
    return QuandlePresentation(std::move(gens_), std::move(relations));
  }

 private:
  QuandleTerm term() {
    QuandleTerm t = atom();
    for (;;) {
      std::int64_t e;
      if (lex_.accept(Tok::Star)) {
        e = 1;
      } else if (lex_.accept(Tok::StarMinus)) {
        e = -1;
      } else if (lex_.accept(Tok::StarCaret)) {
        const bool negative = lex_.accept(Tok::Minus);
        if (!lex_.at(Tok::Int)) lex_.fail({"integer exponent"});
        const std::string digits = lex_.next().text;
        if (digits.size() > 9) lex_.fail({"exponent below 10^9"});
        e = std::stoll(digits) * (negative ? -1 : 1);
      } else {
        return t;
      }
      t = QuandleTerm::apply(std::move(t), atom(), e);
    }
  }

  QuandleTerm atom() {
    if (lex_.at(Tok::Ident)) {
      if (std::find(gens_.begin(), gens_.end(), lex_.peek().text) == gens_.end())
        lex_.fail({"declared generator"});
      return QuandleTerm::generator(lex_.next().text);
    }
    if (lex_.accept(Tok::LParen)) {
      QuandleTerm t = term();
      lex_.expect(Tok::RParen);
      return t;
    }
    lex_.fail({"generator", "'('"});
  }

  Lexer lex_;
  std::vector<std::string> gens_;
};

}  // namespace

QuandlePresentation parse_quandle_presentation(std::string_view text) {
  return QuandleParser(text).parse();
}

std::string to_string(const QuandlePresentation& p) {
  std::ostringstream out;
  out << "quandle<";
  for (std::size_t i = 0; i < p.generators().size(); ++i)
    out << (i ? "," : "") << p.generators()[i];
  out << " | ";
  for (std::size_t r = 0; r < p.relations().size(); ++r)
    out << (r ? ", " : "") << to_string(p.relations()[r].lhs) << "="
        << to_string(p.relations()[r].rhs);
  out << ">";
  return out.str();
}

QuandlePresentation add_type_relations(const QuandlePresentation& p, std::int64_t n) {
  if (n < 1) throw InvalidArgument("type must be positive");
  std::vector<QuandleRelation> relations = p.relations();
  for (const auto& x : p.generators())
    for (const auto& y : p.generators()) {
      if (x == y) continue;
      relations.push_back({QuandleTerm::apply(QuandleTerm::generator(x),
                                              QuandleTerm::generator(y), n),
                           QuandleTerm::generator(x)});
    }
  return QuandlePresentation(p.generators(), std::move(relations));
}

QuandlePresentation simplify(const QuandlePresentation& p) {
  std::vector<std::string> gens = p.generators();
  std::vector<QuandleRelation> rels = p.relations();
  bool changed = true;
  while (changed && gens.size() > 1) {
    changed = false;
    for (std::size_t r = 0; r < rels.size() && !changed; ++r) {
      for (int side = 0; side < 2 && !changed; ++side) {
        const QuandleTerm& bare = side == 0 ? rels[r].lhs : rels[r].rhs;
        const QuandleTerm& value = side == 0 ? rels[r].rhs : rels[r].lhs;
        if (!bare.is_generator() || value.mentions(bare.name())) continue;
        const std::string g = bare.name();
        const QuandleTerm replacement = value;
        rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(r));
        for (auto& rel : rels) {
          rel.lhs = rel.lhs.substitute(g, replacement);
          rel.rhs = rel.rhs.substitute(g, replacement);
        }
        gens.erase(std::find(gens.begin(), gens.end(), g));
        changed = true;
      }
    }
  }
  std::erase_if(rels, [](const QuandleRelation& r) { return r.lhs == r.rhs; });
  return QuandlePresentation(std::move(gens), std::move(rels));
}

}  // namespace qf
