#include <doctest.h>

#include <set>
#include <sstream>

#include "convert.hpp"
#include "qf/errors.hpp"
#include "qf/group.hpp"

namespace {

qf::FiniteGroup presented(const char* text, std::size_t budget = qf::kDefaultBudget) {
  return qf::group_from_presentation(qf::parse_group_presentation(text), budget);
}

bool is_group_table(const oracle::Table& t) {
  const auto n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) return false;
  for (const auto& row : t)
    if (std::set<std::uint32_t>(row.begin(), row.end()).size() != n) return false;
  return true;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("cyclic presentations") {
  for (std::size_t m : {1u, 2u, 5u, 12u}) {
    const auto g = presented(("group<x | x^" + std::to_string(m) + ">").c_str());
    CHECK(g.order() == m);
    CHECK(g.identity() == 0);
    CHECK(qf::groups_isomorphic(g, qf::FiniteGroup::cyclic(m)).has_value());
  }
}

TEST_CASE("quaternion group") {
  const auto q8 = presented("group<x,y | x^2 = y^2 = (x*y)^2>");
  REQUIRE(q8.order() == 8);
  CHECK(is_group_table(rows(q8)));
  const auto hist = qf::order_histogram(q8);
  // one central involution, six elements of order 4
  CHECK(hist.at(1) == 1);
  CHECK(hist.at(2) == 1);
  CHECK(hist.at(4) == 6);
  CHECK(qf::automorphisms(q8).size() == 24);
}

TEST_CASE("binary polyhedral presentations") {
  CHECK(presented("group<x,y | (x*y)^2 = x^3 = y^3>").order() == 24);
  CHECK(presented("group<x,y | (x*y)^2 = x^3 = y^5>").order() == 120);
  CHECK(presented("group<x,y,z | x^2 = y^3 = z^3 = x*y*z>").order() == 24);
  CHECK(presented("group<x,y,z | x^2 = y^3 = z^5 = x*y*z>").order() == 120);
}

TEST_CASE("presentations with an x^2 = y^3 = (xy)^k chain") {
  // these look like the binary polyhedral groups but are larger
  CHECK(presented("group<x,y | x^2 = y^3 = (x*y)^3>").order() == 72);
  CHECK(presented("group<x,y | x^2 = (x*y)^3 = y^3, x^4>").order() == 24);
}

TEST_CASE("small groups against permutation closures") {
  const auto s3 = presented("group<a,b | a^3, b^2, (a*b)^2>");
  CHECK(s3.order() == 6);
  CHECK(is_group_table(rows(s3)));
  const std::vector<qf::Perm> gens{{1, 2, 0}, {1, 0, 2}};
  const auto s3p = qf::FiniteGroup::from_permutations(gens);
  CHECK(s3p.order() == oracle::closure(gens).size());
  CHECK(qf::groups_isomorphic(s3, s3p).has_value());
  CHECK_FALSE(qf::groups_isomorphic(s3, qf::FiniteGroup::cyclic(6)).has_value());
  CHECK(qf::groups_isomorphic(presented("group<a,b | a^2, b^3, a*b*a^-1*b^-1>"),
                              qf::FiniteGroup::cyclic(6))
            .has_value());
}

TEST_CASE("isomorphism maps are homomorphisms") {
  const auto a = presented("group<x,y | x^2 = y^2 = (x*y)^2>");
  const std::vector<qf::Perm> gens{{2, 5, 1, 4, 7, 0, 3, 6}, {4, 6, 3, 5, 1, 7, 0, 2}};
  const auto b = qf::FiniteGroup::from_permutations(gens);
  const auto map = qf::groups_isomorphic(a, b);
  REQUIRE(map);
  for (qf::Index x = 0; x < a.order(); ++x)
    for (qf::Index y = 0; y < a.order(); ++y)
      CHECK((*map)[a.mul(x, y)] == b.mul((*map)[x], (*map)[y]));
}

TEST_CASE("enumeration is deterministic") {
  const char* text = "group<x,y | (x*y)^2 = x^3 = y^3>";
  CHECK(presented(text) == presented(text));
}

TEST_CASE("infinite presentations exceed the budget") {
  CHECK_THROWS_AS(presented("group<x | >", 200), qf::BudgetExceeded);
  CHECK_THROWS_AS(presented("group<x,y | x^2 = y^3 = (x*y)^7>", 500), qf::BudgetExceeded);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(qf::parse_group_presentation("group<x | x^>"), qf::ParseError);
  CHECK_THROWS_AS(qf::parse_group_presentation("group<x | y>"), qf::ParseError);
  CHECK_THROWS_AS(qf::parse_group_presentation("group<x | x^2"), qf::ParseError);
  CHECK_THROWS_AS(qf::parse_group_presentation("grp<x | x^2>"), qf::ParseError);
}

TEST_CASE("presentation text round trip") {
  const auto p = qf::parse_group_presentation("group<x,y | x^2 = y^3 = (x*y)^5>");
  CHECK(qf::to_string(qf::parse_group_presentation(qf::to_string(p))) == qf::to_string(p));
  CHECK(p.relators.size() == 2);
}

TEST_CASE("automorphisms of cyclic groups") {
  // |Aut(Z_m)| = phi(m), orders divide the exponent of the unit group
  const std::pair<std::size_t, std::size_t> cases[] = {{5, 4}, {7, 6}, {8, 4}, {9, 6}, {12, 4}};
  for (auto [m, phi] : cases) {
    const auto g = qf::FiniteGroup::cyclic(m);
    const auto auts = qf::automorphisms(g);
    CHECK(auts.size() == phi);
    for (const auto& f : auts) {
      CHECK(qf::automorphism_order(f) == oracle::perm_order(f.images()));
      CHECK(qf::power(f, static_cast<std::int64_t>(qf::automorphism_order(f))) ==
            qf::GroupAutomorphism::identity(g));
    }
  }
}

TEST_CASE("automorphism images must form a homomorphism") {
  const auto g = qf::FiniteGroup::cyclic(4);
  // swapping two elements that are not inverse-compatible is not a homomorphism
  CHECK_THROWS_AS(qf::GroupAutomorphism(g, qf::Perm{0, 2, 1, 3}), qf::InvalidArgument);
}

TEST_CASE("group table text round trip") {
  const auto g = presented("group<a,b | a^3, b^2, (a*b)^2>");
  std::stringstream s;
  qf::write_group_table(s, g);
  CHECK(qf::read_group_table(s) == g);
  std::istringstream bad("group 2\n0 1\n0 1\n");
  CHECK_THROWS_AS(qf::read_group_table(bad), qf::UsageError);
}

}
