#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qf/group.hpp"
#include "qf/presentation.hpp"
#include "qf/quandle.hpp"

namespace qf {

struct MontesinosTag {
  /// Denominators of the rational tangles, e.g. {2,3,3}.
  std::vector<std::int64_t> denominators;
  /// Matching numerators when known; empty otherwise.
  std::vector<std::int64_t> betas;
  bool operator==(const MontesinosTag&) const = default;
};

struct KnotTags {
  /// Torus knot parameters with p < q.
  std::optional<std::pair<std::int64_t, std::int64_t>> torus;
  bool two_bridge = false;
  std::optional<MontesinosTag> montesinos;
  bool operator==(const KnotTags&) const = default;
};

/// A 1-knot as the closure of a braid. Letter +i is sigma_i, -i its inverse.
class KnotSpec {
 public:
  /// Throws InvalidArgument for letters outside 1..strands-1 and NotAKnot
  /// when the closure has several components.
  KnotSpec(std::string name, std::vector<std::int64_t> braid, std::size_t strands,
           KnotTags tags = {});

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::int64_t>& braid() const noexcept { return braid_; }
  std::size_t strands() const noexcept { return strands_; }
  const KnotTags& tags() const noexcept { return tags_; }

  bool operator==(const KnotSpec&) const = default;

 private:
  std::string name_;
  std::vector<std::int64_t> braid_;
  std::size_t strands_;
  KnotTags tags_;
};

/// Number of components of the closure of a braid.
std::size_t closure_components(const std::vector<std::int64_t>& braid, std::size_t strands);

/// Parses "1,-2,1,-2"; the strand count is one more than the largest |letter|.
std::pair<std::vector<std::int64_t>, std::size_t> parse_braid(std::string_view text);

/// Braid word read backwards, and the mirror image (every crossing flipped).
std::vector<std::int64_t> reversed_braid(const std::vector<std::int64_t>& braid);
std::vector<std::int64_t> mirrored_braid(const std::vector<std::int64_t>& braid);

/// One generator per arc of the closed braid diagram, one relation per
/// crossing. Arcs are numbered top to bottom, left to right; the under arc
/// leaving a positive crossing is (incoming under arc) * (over arc), the one
/// leaving a negative crossing uses *-.
QuandlePresentation wirtinger_presentation(const KnotSpec& k);

/// The diagram cut open at the top of the first strand: the arc arriving
/// there from below is not identified with the arc leaving. Generator "a" is
/// the arc leaving the cut.
QuandlePresentation cut_presentation(const KnotSpec& k);

struct TwistSpinSpec {
  /// Throws InvalidArgument unless n > 1, s > 0 and gcd(n, s) = 1.
  TwistSpinSpec(KnotSpec knot, std::int64_t n, std::int64_t s = 1);

  KnotSpec knot;
  std::int64_t n;
  std::int64_t s;
};

/// cut_presentation plus a *^n x = a for every other generator x, where a is
/// the arc at the cut.
QuandlePresentation twist_spin_presentation(const TwistSpinSpec& t);

/// GAlex(g, f^s). Throws InvalidMonodromy unless f has order t.n.
FiniteQuandle branched_twist_spin_quandle(const TwistSpinSpec& t, const FiniteGroup& g,
                                          const GroupAutomorphism& f);

enum class Family { S1, S2, S3, S4, S5, S6 };

const char* to_string(Family f);

/// The family of twist spins with finite knot quandle that contains t, read
/// off the knot's tags.
std::optional<Family> finite_family(const TwistSpinSpec& t);

struct CatalogTwist {
  std::int64_t n;
  std::string group_source;
  FiniteGroup group;
  GroupAutomorphism monodromy;
  /// Completion of twist_spin_presentation.
  FiniteQuandle quandle;
};

struct CatalogEntry {
  KnotSpec knot;
  std::vector<CatalogTwist> twists;
  std::string notes;

  const CatalogTwist* twist(std::int64_t n) const;
};

class Catalog {
 public:
  /// Reads the JSON catalog and checks every twist against its group:
  /// presentation and permutation realizations agree, the completion has the
  /// group's order and type n, and some order-n automorphism gives an
  /// isomorphic generalized Alexander quandle. Throws CatalogInconsistent.
  static Catalog parse(std::string_view json_text, std::size_t budget = kDefaultBudget);
  static Catalog load(const std::string& path, std::size_t budget = kDefaultBudget);

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

  /// Throws NotFound.
  const CatalogEntry& knot(std::string_view name) const;

  /// The torus knot t_{p,q} in either order, or nullptr.
  const CatalogEntry* torus(std::int64_t p, std::int64_t q) const;

  /// A catalog knot by name (loosely: "t23" finds "t_{2,3}"), or a knot
  /// from a braid word such as "1,-2,1,-2", taken from the catalog when the
  /// braid matches an entry. Throws NotFound for unknown names.
  KnotSpec lookup(std::string_view name_or_braid) const;

  /// Twist spin of a catalog knot: the knot is matched by name, or by braid
  /// word when the name is unknown. Throws NotFound.
  const CatalogEntry& resolve(const KnotSpec& k) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// The catalog shipped with the library, parsed and checked on first use.
const Catalog& builtin_catalog();

/// Text of the shipped catalog.
std::string_view builtin_catalog_json();

}  // namespace qf
