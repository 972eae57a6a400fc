#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qf/errors.hpp"
#include "qf/perm.hpp"

TEST_SUITE("perm") {

TEST_CASE("compose applies the first permutation first") {
  const qf::Perm a{1, 2, 0};
  const qf::Perm b{1, 0, 2};
  // a then b: 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1
  CHECK(qf::compose(a, b) == qf::Perm{0, 2, 1});
  CHECK(qf::is_identity(qf::compose(a, qf::inverse(a))));
  CHECK(qf::is_identity(qf::identity_perm(4)));
}

TEST_CASE("order, power and cycle type") {
  const qf::Perm p{1, 2, 0, 4, 3};
  CHECK(qf::perm_order(p) == 6);
  CHECK(qf::perm_order(p) == oracle::perm_order(p));
  CHECK(qf::perm_power(p, 6) == qf::identity_perm(5));
  CHECK(qf::perm_power(p, -1) == qf::inverse(p));
  CHECK(qf::perm_power(p, 2) == qf::compose(p, p));
  auto ct = qf::cycle_type(p);
  std::sort(ct.begin(), ct.end());
  CHECK(ct == std::vector<std::size_t>{2, 3});
}

TEST_CASE("is_permutation rejects repeats and out-of-range images") {
  const std::vector<qf::Index> ok{2, 0, 1};
  const std::vector<qf::Index> twice{0, 0, 1};
  const std::vector<qf::Index> wide{0, 1, 3};
  CHECK(qf::is_permutation(ok));
  CHECK_FALSE(qf::is_permutation(twice));
  CHECK_FALSE(qf::is_permutation(wide));
}

TEST_CASE("permutation group order matches closure") {
  const std::vector<qf::Perm> s4{{1, 2, 3, 0}, {1, 0, 2, 3}};
  const std::vector<qf::Perm> a5{{1, 2, 0, 3, 4}, {0, 1, 3, 4, 2}, {1, 2, 3, 4, 0}};
  const std::vector<qf::Perm> v4{{1, 0, 3, 2}, {2, 3, 0, 1}};
  for (const auto& gens : {s4, a5, v4})
    CHECK(qf::permutation_group_order(gens, gens[0].size()) == oracle::closure(gens).size());
}

}
