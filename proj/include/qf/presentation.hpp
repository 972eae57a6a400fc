#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qf/group.hpp"
#include "qf/quandle.hpp"

namespace qf {

/// Immutable expression tree over generator names. An inner node applies
/// `*^exponent`: exponent 1 is *, -1 is the right inverse *-.
class QuandleTerm {
 public:
  static QuandleTerm generator(std::string name);
  static QuandleTerm apply(QuandleTerm left, QuandleTerm right, std::int64_t exponent = 1);

  bool is_generator() const noexcept { return node_->left == nullptr; }
  const std::string& name() const { return node_->name; }
  QuandleTerm left() const { return QuandleTerm(node_->left); }
  QuandleTerm right() const { return QuandleTerm(node_->right); }
  std::int64_t exponent() const noexcept { return node_->exponent; }

  bool mentions(std::string_view generator) const;

  /// Replaces every leaf named `generator` with `value`.
  QuandleTerm substitute(std::string_view generator, const QuandleTerm& value) const;

  bool operator==(const QuandleTerm& other) const;

 private:
  struct Node {
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::int64_t exponent = 0;
  };
  explicit QuandleTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

std::string to_string(const QuandleTerm& t);

struct QuandleRelation {
  QuandleTerm lhs;
  QuandleTerm rhs;
  bool operator==(const QuandleRelation&) const = default;
};

class QuandlePresentation {
 public:
  /// Throws InvalidArgument on an empty or duplicated generator list, or a
  /// relation mentioning an undeclared generator.
  QuandlePresentation(std::vector<std::string> generators, std::vector<QuandleRelation> relations);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<QuandleRelation>& relations() const noexcept { return relations_; }

  std::size_t generator_index(std::string_view name) const;

  bool operator==(const QuandlePresentation&) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<QuandleRelation> relations_;
};

/// Grammar:
///   presentation = "quandle" "<" genlist "|" [ relation { "," relation } ] ">"
///   relation     = term "=" term
///   term         = atom { ("*" | "*-" | "*^" int) atom }   (left-associative)
///   atom         = ident | "(" term ")"
QuandlePresentation parse_quandle_presentation(std::string_view text);

std::string to_string(const QuandlePresentation& p);

struct CompletionStats {
  std::size_t allocated = 0;
  std::size_t merges = 0;
  std::size_t passes = 0;
  std::size_t relators = 0;
};

struct CompletionResult {
  FiniteQuandle quandle;
  /// Generator name and its element, in declaration order.
  std::vector<std::pair<std::string, Index>> generator_images;
  CompletionStats stats;
};

/// Completes a finite presentation to an operation table by saturation.
/// Throws BudgetExceeded when more than `budget` elements get allocated.
CompletionResult complete(const QuandlePresentation& p, std::size_t budget = kDefaultBudget);

/// Appends x *^n y = x for every ordered pair of distinct generators.
QuandlePresentation add_type_relations(const QuandlePresentation& p, std::int64_t n);

/// Tietze elimination of generators defined by a relation g = t (t free of g),
/// then removal of relations of the form t = t.
QuandlePresentation simplify(const QuandlePresentation& p);

}  // namespace qf
