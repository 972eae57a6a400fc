#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "qf/group.hpp"
#include "qf/perm.hpp"

namespace qf {

/// A finite set with a binary operation given by its table; entry (x, y)
/// holds x * y. Construction only checks shape and range: use validate() for
/// the quandle axioms.
class FiniteQuandle {
 public:
  FiniteQuandle(std::size_t order, std::vector<Index> table);

  static FiniteQuandle from_rows(const std::vector<std::vector<Index>>& rows);

  /// x * y = x.
  static FiniteQuandle trivial(std::size_t order);

  /// Z/m with x * y = 2y - x.
  static FiniteQuandle dihedral(std::size_t m);

  std::size_t order() const noexcept { return order_; }
  Index op(Index x, Index y) const { return table_[x * order_ + y]; }
  std::span<const Index> table() const noexcept { return table_; }

  /// The right translation S_y : x -> x * y.
  Perm column(Index y) const;

  bool operator==(const FiniteQuandle&) const = default;

 private:
  std::size_t order_;
  std::vector<Index> table_;
};

enum class Axiom { Idempotence, RightInvertibility, SelfDistributivity };

const char* to_string(Axiom a);

struct Validation {
  bool ok = true;
  Axiom axiom = Axiom::Idempotence;
  /// Idempotence: (x, x, x). Right invertibility: (x1, x2, y) with
  /// x1 * y = x2 * y. Self-distributivity: (x, y, z).
  std::array<Index, 3> witness{};
  explicit operator bool() const noexcept { return ok; }
};

Validation validate(const FiniteQuandle& q);

/// Least n >= 1 with x *^n y = x for all x, y (lcm of the orders of the
/// right translations). Finite quandles always have finite type.
std::uint64_t type_of(const FiniteQuandle& q);

/// x * y = f(x y^-1) y.
FiniteQuandle galex(const FiniteGroup& g, const GroupAutomorphism& f);

/// Orbits of the inner group, each sorted, ordered by smallest element.
std::vector<std::vector<Index>> orbits(const FiniteQuandle& q);

bool is_connected(const FiniteQuandle& q);

/// Order of the permutation group generated by the right translations.
std::uint64_t inner_group_order(const FiniteQuandle& q);

/// Greedy generating set: an element joins when it is not already in the
/// subquandle generated by the earlier picks.
std::vector<Index> quandle_generating_set(const FiniteQuandle& q);

/// Number of quandle homomorphisms src -> dst.
std::uint64_t hom_count(const FiniteQuandle& src, const FiniteQuandle& dst);

/// Number of colorings by the dihedral quandle of order m.
std::uint64_t colorings(const FiniteQuandle& q, std::size_t m);

struct QuandleProfile {
  static constexpr std::uint64_t kInfiniteType = 0;  // unused for finite tables

  std::size_t order = 0;
  std::uint64_t type = 1;
  std::vector<std::size_t> orbit_sizes;
  std::vector<std::vector<std::size_t>> s_cycle_profile;
  std::uint64_t inner_group_order = 1;

  bool operator==(const QuandleProfile&) const = default;
};

QuandleProfile profile(const FiniteQuandle& q);

/// An isomorphism q1 -> q2 as an image list, if one exists.
std::optional<Perm> isomorphic(const FiniteQuandle& q1, const FiniteQuandle& q2);

/// First automorphism of g (in automorphisms() order) of order n whose
/// generalized Alexander quandle is isomorphic to target. Throws NotFound.
GroupAutomorphism find_monodromy(const FiniteGroup& g, std::uint64_t n,
                                 const FiniteQuandle& target);

/// One representative per isomorphism class of quandles of the given order
/// (at most 5), sorted by canonical table.
std::vector<FiniteQuandle> enumerate_quandles(std::size_t order);

/// Text format: "quandle <order>" followed by rows.
FiniteQuandle read_quandle_table(std::istream& in);
void write_quandle_table(std::ostream& out, const FiniteQuandle& q);

}  // namespace qf
