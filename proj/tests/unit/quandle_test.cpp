#include <doctest.h>

#include <random>
#include <sstream>

#include "convert.hpp"
#include "qf/errors.hpp"
#include "qf/group.hpp"
#include "qf/quandle.hpp"

namespace {

// Quandles of order n found by trying every table whose columns are
// permutations fixing the column index, up to isomorphism.
std::vector<oracle::Table> brute_quandles(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::vector<std::vector<std::uint32_t>>> columns(n);
  for (std::uint32_t y = 0; y < n; ++y)
    for (const auto& s : perms)
      if (s[y] == y) columns[y].push_back(s);

  std::vector<oracle::Table> classes;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    oracle::Table t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t x = 0; x < n; ++x) t[x][y] = columns[y][pick[y]][x];
    if (oracle::is_quandle(t)) {
      bool fresh = true;
      for (const auto& c : classes) fresh = fresh && !oracle::isomorphic(c, t);
      if (fresh) classes.push_back(t);
    }
    std::uint32_t i = 0;
    while (i < n && ++pick[i] == columns[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  return classes;
}

qf::FiniteQuandle from(const oracle::Table& t) { return qf::FiniteQuandle::from_rows(t); }

}  // namespace

TEST_SUITE("quandle") {

TEST_CASE("dihedral quandles") {
  for (std::uint32_t m : {3u, 4u, 5u, 7u}) {
    const auto r = qf::FiniteQuandle::dihedral(m);
    CHECK(rows(r) == oracle::dihedral(m));
    CHECK(qf::validate(r).ok);
    CHECK(qf::type_of(r) == 2);
  }
  CHECK(qf::inner_group_order(qf::FiniteQuandle::dihedral(3)) == 6);
  CHECK(qf::inner_group_order(qf::FiniteQuandle::dihedral(5)) == 10);
  CHECK(qf::is_connected(qf::FiniteQuandle::dihedral(5)));
  const auto r4 = qf::orbits(qf::FiniteQuandle::dihedral(4));
  CHECK(r4 == std::vector<std::vector<qf::Index>>{{0, 2}, {1, 3}});
}

TEST_CASE("trivial quandle") {
  const auto t = qf::FiniteQuandle::trivial(4);
  CHECK(qf::validate(t).ok);
  CHECK(qf::type_of(t) == 1);
  CHECK(qf::orbits(t).size() == 4);
  CHECK(qf::inner_group_order(t) == 1);
}

TEST_CASE("validate names the broken axiom") {
  auto bad = oracle::dihedral(3);
  bad[1][1] = 2;
  bad[2][1] = 1;
  auto v = qf::validate(from(bad));
  CHECK_FALSE(v.ok);
  CHECK(v.axiom == qf::Axiom::Idempotence);

  oracle::Table repeat{{0, 0}, {0, 1}};
  v = qf::validate(from(repeat));
  CHECK_FALSE(v.ok);
  CHECK(v.axiom == qf::Axiom::RightInvertibility);

  // every column a permutation fixing its index, but not distributive
  oracle::Table nd{{0, 2, 1}, {1, 1, 0}, {2, 0, 2}};
  REQUIRE_FALSE(oracle::is_quandle(nd));
  v = qf::validate(from(nd));
  CHECK_FALSE(v.ok);
  CHECK(v.axiom == qf::Axiom::SelfDistributivity);
}

TEST_CASE("homomorphism counts") {
  const auto r3 = qf::FiniteQuandle::dihedral(3);
  CHECK(qf::hom_count(r3, r3) == 9);
  CHECK(qf::colorings(r3, 3) == 9);
  for (std::uint32_t a : {3u, 4u})
    for (std::uint32_t b : {3u, 4u, 5u})
      CHECK(qf::hom_count(qf::FiniteQuandle::dihedral(a), qf::FiniteQuandle::dihedral(b)) ==
            oracle::hom_count(oracle::dihedral(a), oracle::dihedral(b)));
}

TEST_CASE("enumeration against brute force") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const auto brute = brute_quandles(n);
    const auto lib = qf::enumerate_quandles(n);
    REQUIRE(lib.size() == brute.size());
    for (const auto& b : brute) {
      int matches = 0;
      for (const auto& q : lib) matches += oracle::isomorphic(rows(q), b);
      CHECK(matches == 1);
    }
  }
  CHECK(qf::enumerate_quandles(3).size() == 3);
  CHECK(qf::enumerate_quandles(4).size() == 7);
}

TEST_CASE("isomorphism returns a valid map or nothing") {
  const auto qs = qf::enumerate_quandles(4);
  std::mt19937 rng(7);
  for (const auto& q : qs) {
    std::vector<std::uint32_t> p(4);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    oracle::Table relabeled(4, std::vector<std::uint32_t>(4));
    const auto t = rows(q);
    for (std::uint32_t x = 0; x < 4; ++x)
      for (std::uint32_t y = 0; y < 4; ++y) relabeled[p[x]][p[y]] = p[t[x][y]];
    const auto map = qf::isomorphic(q, from(relabeled));
    REQUIRE(map);
    CHECK(oracle::is_map_iso(t, relabeled, *map));
    for (const auto& other : qs)
      if (!(other == q)) CHECK_FALSE(qf::isomorphic(q, other));
  }
}

TEST_CASE("generalized Alexander quandle of Q8") {
  const std::vector<qf::Perm> gens{{2, 5, 1, 4, 7, 0, 3, 6}, {4, 6, 3, 5, 1, 7, 0, 2}};
  const auto q8 = qf::FiniteGroup::from_permutations(gens);
  const auto auts = qf::automorphisms(q8);
  REQUIRE(auts.size() == 24);
  std::map<std::uint64_t, int> by_order;
  for (const auto& f : auts) {
    const auto q = qf::galex(q8, f);
    CHECK(rows(q) == oracle::galex(rows(q8), f.images()));
    CHECK(oracle::is_quandle(rows(q)));
    CHECK(qf::type_of(q) == qf::automorphism_order(f));
    ++by_order[qf::automorphism_order(f)];
  }
  // Aut(Q8) = S4
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 9);
  CHECK(by_order[3] == 8);
  CHECK(by_order[4] == 6);
}

TEST_CASE("type equals automorphism order on random groups") {
  std::mt19937 rng(20240611);
  int checked = 0;
  for (int round = 0; round < 30; ++round) {
    const std::size_t degree = 3 + rng() % 3;
    std::vector<qf::Perm> gens;
    for (int k = 0; k < 2; ++k) {
      qf::Perm p = qf::identity_perm(degree);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    const auto g = qf::FiniteGroup::from_permutations(gens);
    REQUIRE(g.order() == oracle::closure(gens).size());
    for (const auto& f : qf::automorphisms(g)) {
      const auto q = qf::galex(g, f);
      CHECK(qf::type_of(q) == oracle::type(rows(q)));
      CHECK(qf::type_of(q) == qf::automorphism_order(f));
      ++checked;
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("find_monodromy recovers a dihedral quandle") {
  const auto z5 = qf::FiniteGroup::cyclic(5);
  const auto f = qf::find_monodromy(z5, 2, qf::FiniteQuandle::dihedral(5));
  CHECK(qf::automorphism_order(f) == 2);
  CHECK(qf::isomorphic(qf::galex(z5, f), qf::FiniteQuandle::dihedral(5)));
  CHECK_THROWS_AS(qf::find_monodromy(z5, 3, qf::FiniteQuandle::dihedral(5)), qf::NotFound);
}

TEST_CASE("generating sets") {
  CHECK(qf::quandle_generating_set(qf::FiniteQuandle::dihedral(3)).size() == 2);
  CHECK(qf::quandle_generating_set(qf::FiniteQuandle::trivial(3)).size() == 3);
}

TEST_CASE("quandle table text round trip") {
  const auto q = qf::FiniteQuandle::dihedral(5);
  std::stringstream s;
  qf::write_quandle_table(s, q);
  CHECK(qf::read_quandle_table(s) == q);
  std::istringstream bad("quandle 2\n0 5\n1 1\n");
  CHECK_THROWS_AS(qf::read_quandle_table(bad), qf::UsageError);
  std::istringstream truncated("quandle 3\n0 2 1\n");
  CHECK_THROWS_AS(qf::read_quandle_table(truncated), qf::UsageError);
}

}
