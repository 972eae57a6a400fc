#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qf/knot.hpp"
#include "qf/quandle.hpp"

namespace qf {

struct InvariantProfile {
  std::size_t order = 0;
  std::uint64_t type = 1;
  bool connected = true;
  std::vector<std::size_t> orbit_sizes;
  std::uint64_t inner_group_order = 1;
  std::uint64_t colorings_r3 = 0;
  std::uint64_t colorings_r5 = 0;

  bool operator==(const InvariantProfile&) const = default;
};

InvariantProfile invariant_profile(const FiniteQuandle& q);

/// An invariant on which the two sides differ.
struct Witness {
  std::string invariant;
  std::uint64_t a;
  std::uint64_t b;
};

struct Certificate {
  bool equivalent = false;
  /// "invariant-witness" when a computed invariant separates the two sides,
  /// otherwise "finite-classification" (same n and same knot, or a verdict
  /// that no computed invariant can see).
  std::string basis;
  std::vector<Witness> witnesses;
  InvariantProfile a;
  InvariantProfile b;
  bool quandles_isomorphic = false;
  bool groups_isomorphic = false;
  std::vector<std::string> caveats;
};

/// Decides equivalence of two twist spins with finite knot quandle: they are
/// equivalent exactly when n agrees and the knots are the same catalog knot.
/// Throws OutsideFiniteCatalog when a spec lies outside the finite families
/// or has no catalog data, InvalidArgument when s != 1.
Certificate classify(const TwistSpinSpec& a, const TwistSpinSpec& b,
                     const Catalog& catalog = builtin_catalog());

struct TripleMember {
  std::string label;
  std::string knot;
  std::int64_t n;
  std::size_t order;
  std::uint64_t type;
};

struct TripleReport {
  std::array<std::int64_t, 3> pqr;
  std::array<TripleMember, 3> members;
  /// Pairs (0,1), (0,2), (1,2).
  std::array<bool, 3> groups_isomorphic;
  std::array<bool, 3> quandles_isomorphic;
};

/// For pairwise coprime p < q < r (any input order): the twist spins
/// tau^p t_{q,r}, tau^q t_{p,r}, tau^r t_{p,q}. Throws InvalidArgument for bad
/// triples and OutsideCatalog when a member has no catalog data.
TripleReport triple_report(std::int64_t p, std::int64_t q, std::int64_t r,
                           const Catalog& catalog = builtin_catalog());

}  // namespace qf
