#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qf/perm.hpp"

namespace qf {

inline constexpr std::size_t kDefaultBudget = 10000;
inline constexpr std::size_t kDefaultGroupCap = 360;

struct GroupPresentation;

/// A finite group given by its full multiplication table.
class FiniteGroup {
 public:
  /// Row-major table: table[x * order + y] = x * y. Throws InvalidArgument
  /// unless the table is a group (associativity included).
  FiniteGroup(std::size_t order, std::vector<Index> table);

  static FiniteGroup from_rows(const std::vector<std::vector<Index>>& rows);

  /// Closure of a set of permutations; element 0 is the identity and the
  /// remaining elements are numbered in breadth-first order.
  static FiniteGroup from_permutations(std::span<const Perm> gens, std::size_t cap = 100000);

  /// Cyclic group Z/m, element k standing for k.
  static FiniteGroup cyclic(std::size_t m);

  std::size_t order() const noexcept { return order_; }
  Index identity() const noexcept { return identity_; }
  Index mul(Index x, Index y) const { return table_[x * order_ + y]; }
  Index inv(Index x) const { return inv_[x]; }
  std::span<const Index> table() const noexcept { return table_; }

  bool operator==(const FiniteGroup&) const = default;

 private:
  struct Trusted {};
  // For tables that are groups by construction; skips the associativity scan.
  FiniteGroup(Trusted, std::size_t order, std::vector<Index> table);
  void index_identity_and_inverses();
  friend FiniteGroup group_from_presentation(const GroupPresentation& p, std::size_t budget);

  std::size_t order_;
  std::vector<Index> table_;
  std::vector<Index> inv_;
  Index identity_ = 0;
};

/// A bijection of group elements respecting multiplication.
class GroupAutomorphism {
 public:
  /// Checks that `images` is an automorphism of g (InvalidArgument otherwise).
  GroupAutomorphism(const FiniteGroup& g, Perm images);

  static GroupAutomorphism identity(const FiniteGroup& g);

  Index operator()(Index x) const { return images_[x]; }
  const Perm& images() const noexcept { return images_; }
  std::size_t size() const noexcept { return images_.size(); }

  bool operator==(const GroupAutomorphism&) const = default;

 private:
  struct Unchecked {};
  GroupAutomorphism(Unchecked, Perm images) : images_(std::move(images)) {}
  friend GroupAutomorphism power(const GroupAutomorphism& f, std::int64_t s);
  friend std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g, std::size_t cap);

  Perm images_;
};

struct Letter {
  std::size_t generator;
  bool inverse;
  bool operator==(const Letter&) const = default;
};

using GroupWord = std::vector<Letter>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;
};

/// Parses `group<x,y | x^2 = y^3 = (x*y)^5, ...>`; chains of '=' expand to
/// consecutive pairwise relators.
GroupPresentation parse_group_presentation(std::string_view text);

std::string to_string(const GroupPresentation& p);

/// Todd-Coxeter (HLT with coincidence merging) over the trivial subgroup.
/// Element 0 is the identity; other elements follow definition order.
FiniteGroup group_from_presentation(const GroupPresentation& p,
                                    std::size_t budget = kDefaultBudget);

std::uint64_t element_order(const FiniteGroup& g, Index x);

/// Number of elements of each order, keyed by order.
std::map<std::uint64_t, std::size_t> order_histogram(const FiniteGroup& g);

/// A small generating set picked greedily (large element orders first).
std::vector<Index> generating_set(const FiniteGroup& g);

/// The whole automorphism group, ordered lexicographically by the images of
/// generating_set(g).
std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g,
                                             std::size_t cap = kDefaultGroupCap);

std::uint64_t automorphism_order(const GroupAutomorphism& f);

/// s-fold composite of f; negative s composes the inverse.
GroupAutomorphism power(const GroupAutomorphism& f, std::int64_t s);

/// An isomorphism g1 -> g2 as an image list, if one exists.
std::optional<Perm> groups_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2,
                                      std::size_t cap = kDefaultGroupCap);

/// Text format: "group <order>" followed by one row of indices per element.
FiniteGroup read_group_table(std::istream& in);
void write_group_table(std::ostream& out, const FiniteGroup& g);

}  // namespace qf
