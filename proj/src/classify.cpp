#include "qf/classify.hpp"

#include <algorithm>
#include <numeric>

#include "qf/errors.hpp"

namespace qf {

InvariantProfile invariant_profile(const FiniteQuandle& q) {
  InvariantProfile p;
  p.order = q.order();
  p.type = type_of(q);
  const auto blocks = orbits(q);
  p.connected = blocks.size() == 1;
  for (const auto& b : blocks) p.orbit_sizes.push_back(b.size());
  p.inner_group_order = inner_group_order(q);
  p.colorings_r3 = colorings(q, 3);
  p.colorings_r5 = colorings(q, 5);
  return p;
}

namespace {

std::string describe(const TwistSpinSpec& t) {
  return "tau^" + std::to_string(t.n) + "(" + t.knot.name() + ")";
}

const CatalogTwist& finite_instance(const TwistSpinSpec& t, const Catalog& catalog) {
  if (t.s != 1) throw InvalidArgument("classification covers plain twist spins (s = 1)");
  if (!finite_family(t))
    throw OutsideFiniteCatalog(describe(t) + " is not in a family with finite knot quandle");
  const CatalogEntry* entry = nullptr;
  try {
    entry = &catalog.resolve(t.knot);
  } catch (const NotFound&) {
    throw OutsideFiniteCatalog(describe(t) + " has no catalog data");
  }
  const CatalogTwist* twist = entry->twist(t.n);
  if (!twist) throw OutsideFiniteCatalog(describe(t) + " has no catalog data");
  return *twist;
}

}  // namespace

Certificate classify(const TwistSpinSpec& a, const TwistSpinSpec& b, const Catalog& catalog) {
  const CatalogTwist& ta = finite_instance(a, catalog);
  const CatalogTwist& tb = finite_instance(b, catalog);
  const std::string& name_a = catalog.resolve(a.knot).knot.name();
  const std::string& name_b = catalog.resolve(b.knot).knot.name();

  Certificate c;
  c.equivalent = a.n == b.n && name_a == name_b;
  c.a = invariant_profile(ta.quandle);
  c.b = invariant_profile(tb.quandle);
  c.quandles_isomorphic = isomorphic(ta.quandle, tb.quandle).has_value();
  c.groups_isomorphic = ta.group.order() == tb.group.order() &&
                        groups_isomorphic(ta.group, tb.group).has_value();

  auto compare = [&](const char* name, std::uint64_t x, std::uint64_t y) {
    if (x != y) c.witnesses.push_back({name, x, y});
  };
  compare("order", c.a.order, c.b.order);
  compare("type", c.a.type, c.b.type);
  compare("colorings_R3", c.a.colorings_r3, c.b.colorings_r3);
  compare("colorings_R5", c.a.colorings_r5, c.b.colorings_r5);
  compare("inner_group_order", c.a.inner_group_order, c.b.inner_group_order);
  c.basis = c.witnesses.empty() ? "finite-classification" : "invariant-witness";

  if (c.equivalent) return c;
  if (c.quandles_isomorphic) {
    c.caveats.push_back(
        "the knot quandles are isomorphic, so every quandle invariant agrees; the verdict rests "
        "on the classification of twist spins with finite knot quandle (different knots)");
  } else if (c.witnesses.empty()) {
    c.caveats.push_back(
        "the knot quandles are not isomorphic although order, type, colorings and inner group "
        "order agree");
  } else {
    std::string list;
    for (const auto& w : c.witnesses) list += (list.empty() ? "" : ", ") + w.invariant;
    std::string agree;
    if (c.a.order == c.b.order) agree += "order";
    if (c.a.colorings_r3 == c.b.colorings_r3) agree += std::string(agree.empty() ? "" : ", ") + "colorings_R3";
    c.caveats.push_back("distinguished by " + list +
                        (agree.empty() ? std::string() : " although " + agree + " agree"));
  }
  if (c.groups_isomorphic)
    c.caveats.push_back("the fundamental groups of the branched covers are isomorphic");
  return c;
}

TripleReport triple_report(std::int64_t p, std::int64_t q, std::int64_t r, const Catalog& catalog) {
  std::array<std::int64_t, 3> t{p, q, r};
  std::sort(t.begin(), t.end());
  if (t[0] < 2) throw InvalidArgument("triple entries must exceed 1");
  if (std::gcd(t[0], t[1]) != 1 || std::gcd(t[0], t[2]) != 1 || std::gcd(t[1], t[2]) != 1)
    throw InvalidArgument("triple entries must be pairwise coprime");

  TripleReport report{};
  report.pqr = t;
  std::array<const CatalogTwist*, 3> twists{};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::int64_t n = t[i];
    const std::int64_t u = t[(i + 1) % 3];
    const std::int64_t v = t[(i + 2) % 3];
    const std::string label = "tau^" + std::to_string(n) + "(t_{" +
                              std::to_string(std::min(u, v)) + "," +
                              std::to_string(std::max(u, v)) + "})";
    const CatalogEntry* entry = catalog.torus(u, v);
    const CatalogTwist* twist = entry ? entry->twist(n) : nullptr;
    if (!twist) throw OutsideCatalog(label + " is not in the catalog (its group may be infinite)");
    twists[i] = twist;
    report.members[i] = {"F" + std::to_string(i + 1), entry->knot.name(), n,
                         twist->quandle.order(), type_of(twist->quandle)};
  }
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& x = *twists[pairs[k].first];
    const auto& y = *twists[pairs[k].second];
    report.groups_isomorphic[k] =
        x.group.order() == y.group.order() && groups_isomorphic(x.group, y.group).has_value();
    report.quandles_isomorphic[k] = isomorphic(x.quandle, y.quandle).has_value();
  }
  return report;
}

}  // namespace qf
