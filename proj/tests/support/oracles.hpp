#pragma once

// Brute-force reference implementations used by the tests. They work on
// plain row tables and never call into the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<std::uint32_t>>;

inline Table dihedral(std::uint32_t m) {
  Table t(m, std::vector<std::uint32_t>(m));
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y) t[x][y] = (2 * y + 2 * m - x) % m;
  return t;
}

inline bool is_quandle(const Table& t) {
  const auto n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    if (t[x][x] != x) return false;
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (hit[t[x][y]]) return false;
      hit[t[x][y]] = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) return false;
  return true;
}

// Tries every bijection.
inline bool isomorphic(const Table& a, const Table& b) {
  const auto n = a.size();
  if (b.size() != n) return false;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = p[a[x][y]] == b[p[x]][p[y]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool is_map_iso(const Table& a, const Table& b, const std::vector<std::uint32_t>& p) {
  const auto n = a.size();
  if (b.size() != n || p.size() != n) return false;
  if (std::set<std::uint32_t>(p.begin(), p.end()).size() != n) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p[a[x][y]] != b[p[x]][p[y]]) return false;
  return true;
}

// Least k with x *^k y = x everywhere, by direct iteration.
inline std::uint64_t type(const Table& t) {
  const auto n = t.size();
  for (std::uint64_t k = 1;; ++k) {
    bool all = true;
    for (std::size_t x = 0; x < n && all; ++x)
      for (std::size_t y = 0; y < n && all; ++y) {
        std::uint32_t v = static_cast<std::uint32_t>(x);
        for (std::uint64_t i = 0; i < k; ++i) v = t[v][y];
        all = v == x;
      }
    if (all) return k;
  }
}

// Counts maps src -> dst respecting the operation, by exhaustive search.
inline std::uint64_t hom_count(const Table& src, const Table& dst) {
  const auto n = src.size();
  const auto m = dst.size();
  std::vector<std::uint32_t> f(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = f[src[x][y]] == dst[f[x]][f[y]];
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return count;
}

// Closure of a set of permutations under composition.
inline std::set<std::vector<std::uint32_t>> closure(const std::vector<std::vector<std::uint32_t>>& gens) {
  std::set<std::vector<std::uint32_t>> seen;
  if (gens.empty()) return seen;
  std::vector<std::uint32_t> id(gens[0].size());
  std::iota(id.begin(), id.end(), 0u);
  std::vector<std::vector<std::uint32_t>> frontier{id};
  seen.insert(id);
  while (!frontier.empty()) {
    auto p = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      std::vector<std::uint32_t> q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = g[p[i]];
      if (seen.insert(q).second) frontier.push_back(q);
    }
  }
  return seen;
}

// x * y = f(x y^-1) y on a group given by a multiplication table.
inline Table galex(const Table& mul, const std::vector<std::uint32_t>& f) {
  const auto n = mul.size();
  std::vector<std::uint32_t> inv(n);
  std::uint32_t e = 0;
  for (std::uint32_t x = 0; x < n; ++x)
    if (mul[x][x] == x) e = x;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (mul[x][y] == e) inv[x] = y;
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) t[x][y] = mul[f[mul[x][inv[y]]]][y];
  return t;
}

inline std::uint64_t perm_order(const std::vector<std::uint32_t>& p) {
  std::vector<std::uint32_t> q = p;
  for (std::uint64_t k = 1;; ++k) {
    bool id = true;
    for (std::size_t i = 0; i < q.size(); ++i) id = id && q[i] == i;
    if (id) return k;
    for (auto& v : q) v = p[v];
  }
}

}  // namespace oracle
