#include <doctest.h>

#include <json.hpp>

#include "qf/classify.hpp"
#include "qf/errors.hpp"
#include "qf/serialize.hpp"

namespace {

qf::TwistSpinSpec spec(const char* name, int n, int s = 1) {
  return {qf::builtin_catalog().knot(name).knot, n, s};
}

qf::Certificate cls(const char* a, int na, const char* b, int nb) {
  return qf::classify(spec(a, na), spec(b, nb), qf::builtin_catalog());
}

bool has_witness(const qf::Certificate& c, const std::string& name) {
  for (const auto& w : c.witnesses)
    if (w.invariant == name) return true;
  return false;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("invariant profiles") {
  const auto p = qf::invariant_profile(qf::FiniteQuandle::dihedral(5));
  CHECK(p.order == 5);
  CHECK(p.type == 2);
  CHECK(p.connected);
  CHECK(p.orbit_sizes == std::vector<std::size_t>{5});
  CHECK(p.inner_group_order == 10);
  CHECK(p.colorings_r3 == 3);
  CHECK(p.colorings_r5 == 25);
}

TEST_CASE("different orders") {
  const auto c = cls("t_{2,3}", 3, "t_{2,5}", 3);
  CHECK_FALSE(c.equivalent);
  CHECK(c.basis == "invariant-witness");
  REQUIRE(has_witness(c, "order"));
  CHECK(c.witnesses.front().a == 8);
  CHECK(c.witnesses.front().b == 120);
}

TEST_CASE("same order and colorings, different type") {
  const auto c = cls("t_{3,4}", 2, "t_{2,3}", 4);
  CHECK_FALSE(c.equivalent);
  CHECK(c.a.order == 24);
  CHECK(c.b.order == 24);
  CHECK(c.a.colorings_r3 == 9);
  CHECK(c.b.colorings_r3 == 9);
  CHECK(has_witness(c, "type"));
  CHECK_FALSE(has_witness(c, "order"));
  CHECK(c.groups_isomorphic);
  REQUIRE_FALSE(c.caveats.empty());
  CHECK(c.caveats.front().find("type") != std::string::npos);
}

TEST_CASE("isomorphic quandles, different knots") {
  const auto c = cls("figure-eight", 2, "t_{2,5}", 2);
  CHECK_FALSE(c.equivalent);
  CHECK(c.quandles_isomorphic);
  CHECK(c.witnesses.empty());
  CHECK(c.basis == "finite-classification");
  REQUIRE_FALSE(c.caveats.empty());
  CHECK(c.caveats.front().find("isomorphic") != std::string::npos);
}

TEST_CASE("identical specs") {
  const auto c = cls("t_{2,3}", 5, "t_{2,3}", 5);
  CHECK(c.equivalent);
  CHECK(c.witnesses.empty());
  CHECK(c.caveats.empty());
  // the catalog matches by braid when the name is unknown
  const qf::TwistSpinSpec anon(qf::KnotSpec("anon", {1, 1, 1}, 2, spec("t_{2,3}", 5).knot.tags()), 5);
  CHECK(qf::classify(anon, spec("t_{2,3}", 5), qf::builtin_catalog()).equivalent);
}

TEST_CASE("symmetry over the catalog") {
  const std::pair<const char*, int> specs[] = {
      {"figure-eight", 2}, {"t_{2,5}", 2}, {"t_{3,4}", 2}, {"t_{2,3}", 3}, {"t_{2,3}", 4}};
  for (const auto& [a, na] : specs)
    for (const auto& [b, nb] : specs) {
      const auto x = cls(a, na, b, nb);
      const auto y = cls(b, nb, a, na);
      CHECK(x.equivalent == y.equivalent);
      CHECK(x.witnesses.size() == y.witnesses.size());
      CHECK(x.quandles_isomorphic == y.quandles_isomorphic);
      if (!x.witnesses.empty()) CHECK_FALSE(x.equivalent);
    }
}

TEST_CASE("specs outside the finite families") {
  CHECK_THROWS_AS(cls("t_{2,7}", 3, "t_{2,3}", 3), qf::OutsideFiniteCatalog);
  CHECK_THROWS_AS(cls("t_{2,3}", 6, "t_{2,3}", 3), qf::OutsideFiniteCatalog);
  // in a family, but no data shipped
  const qf::KnotSpec t29("t29", {1, 1, 1, 1, 1, 1, 1, 1, 1}, 2, qf::KnotTags{std::pair{2, 9}, true, {}});
  CHECK_THROWS_AS(qf::classify({t29, 2}, spec("t_{2,3}", 2), qf::builtin_catalog()),
                  qf::OutsideFiniteCatalog);
  CHECK_THROWS_AS(qf::classify(spec("t_{2,3}", 5, 2), spec("t_{2,3}", 5), qf::builtin_catalog()),
                  qf::InvalidArgument);
}

TEST_CASE("triple report for (2,3,5)") {
  const auto r = qf::triple_report(2, 3, 5, qf::builtin_catalog());
  CHECK(r.pqr == std::array<std::int64_t, 3>{2, 3, 5});
  for (int k = 0; k < 3; ++k) {
    CHECK(r.groups_isomorphic[k]);
    CHECK_FALSE(r.quandles_isomorphic[k]);
    CHECK(r.members[k].order == 120);
    CHECK(r.members[k].type == static_cast<std::uint64_t>(r.pqr[k]));
  }
  CHECK(r.members[0].knot == "t_{3,5}");
  CHECK(r.members[1].knot == "t_{2,5}");
  CHECK(r.members[2].knot == "t_{2,3}");
  const auto permuted = qf::triple_report(5, 3, 2, qf::builtin_catalog());
  CHECK(qf::to_json(permuted) == qf::to_json(r));
}

TEST_CASE("triple report errors") {
  CHECK_THROWS_AS(qf::triple_report(2, 3, 7, qf::builtin_catalog()), qf::OutsideCatalog);
  CHECK_THROWS_AS(qf::triple_report(2, 4, 5, qf::builtin_catalog()), qf::InvalidArgument);
  CHECK_THROWS_AS(qf::triple_report(1, 3, 5, qf::builtin_catalog()), qf::InvalidArgument);
}

TEST_CASE("certificate JSON") {
  const auto j = nlohmann::json::parse(qf::to_json(cls("t_{3,4}", 2, "t_{2,3}", 4)));
  CHECK(j.at("verdict") == "not_equivalent");
  CHECK(j.at("basis") == "invariant-witness");
  CHECK(j.at("witness").at(0).at("invariant") == "type");
  CHECK(j.at("profiles").at("a").at("type") == 2);
  CHECK(j.at("profiles").at("b").at("type") == 4);
  CHECK(j.at("caveats").is_array());
  const auto t = nlohmann::json::parse(qf::to_json(qf::triple_report(2, 3, 5, qf::builtin_catalog())));
  CHECK(t.at("groups_isomorphic").at("F1-F2") == true);
  CHECK(t.at("quandles_isomorphic").at("F2-F3") == false);
}

}
