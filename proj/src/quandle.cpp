#include "qf/quandle.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "qf/errors.hpp"
#include "table_io.hpp"

namespace qf {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

// Right-division table: rdiv[x * n + y] = x *^-1 y. Requires bijective columns.
std::vector<Index> right_division(const FiniteQuandle& q) {
  const std::size_t n = q.order();
  std::vector<Index> rdiv(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) rdiv[q.op(x, y) * n + y] = x;
  return rdiv;
}

}  // namespace

FiniteQuandle::FiniteQuandle(std::size_t order, std::vector<Index> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0) throw InvalidArgument("quandle order must be positive");
  if (table_.size() != order_ * order_) throw InvalidArgument("quandle table has the wrong size");
  for (Index v : table_)
    if (v >= order_) throw InvalidArgument("quandle table entry out of range");
}

FiniteQuandle FiniteQuandle::from_rows(const std::vector<std::vector<Index>>& rows) {
  std::vector<Index> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw InvalidArgument("quandle table must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteQuandle(rows.size(), std::move(flat));
}

FiniteQuandle FiniteQuandle::trivial(std::size_t order) {
  std::vector<Index> t(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) t[x * order + y] = static_cast<Index>(x);
  return FiniteQuandle(order, std::move(t));
}

FiniteQuandle FiniteQuandle::dihedral(std::size_t m) {
  std::vector<Index> t(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) t[x * m + y] = static_cast<Index>((2 * y + m - x) % m);
  return FiniteQuandle(m, std::move(t));
}

Perm FiniteQuandle::column(Index y) const {
  Perm p(order_);
  for (Index x = 0; x < order_; ++x) p[x] = op(x, y);
  return p;
}

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::Idempotence: return "idempotence";
    case Axiom::RightInvertibility: return "right-invertibility";
    case Axiom::SelfDistributivity: return "self-distributivity";
  }
  return "?";
}

Validation validate(const FiniteQuandle& q) {
  const std::size_t n = q.order();
  for (Index x = 0; x < n; ++x)
    if (q.op(x, x) != x) return {false, Axiom::Idempotence, {x, x, x}};
  for (Index y = 0; y < n; ++y) {
    std::vector<Index> preimage(n, kUnset);
    for (Index x = 0; x < n; ++x) {
      const Index v = q.op(x, y);
      if (preimage[v] != kUnset) return {false, Axiom::RightInvertibility, {preimage[v], x, y}};
      preimage[v] = x;
    }
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (q.op(q.op(x, y), z) != q.op(q.op(x, z), q.op(y, z)))
          return {false, Axiom::SelfDistributivity, {x, y, z}};
  return {};
}

std::uint64_t type_of(const FiniteQuandle& q) {
  std::uint64_t t = 1;
  for (Index y = 0; y < q.order(); ++y) t = std::lcm(t, perm_order(q.column(y)));
  return t;
}

FiniteQuandle galex(const FiniteGroup& g, const GroupAutomorphism& f) {
  if (f.size() != g.order()) throw InvalidArgument("automorphism belongs to a different group");
  const std::size_t n = g.order();
  std::vector<Index> t(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t[x * n + y] = g.mul(f(g.mul(x, g.inv(y))), y);
  return FiniteQuandle(n, std::move(t));
}

std::vector<std::vector<Index>> orbits(const FiniteQuandle& q) {
  const std::size_t n = q.order();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Index a = find(x);
      const Index b = find(q.op(x, y));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<Index, std::vector<Index>> blocks;
  for (Index x = 0; x < n; ++x) blocks[find(x)].push_back(x);
  std::vector<std::vector<Index>> out;
  for (auto& [root, members] : blocks) out.push_back(std::move(members));
  return out;
}

bool is_connected(const FiniteQuandle& q) { return orbits(q).size() == 1; }

std::uint64_t inner_group_order(const FiniteQuandle& q) {
  std::vector<Perm> gens;
  for (Index y = 0; y < q.order(); ++y) gens.push_back(q.column(y));
  return permutation_group_order(gens, q.order());
}

namespace {

// Elements of the subquandle generated by `gens`: the orbit of the generators
// under the right translations by generators and their inverses.
std::vector<bool> subquandle_closure(const FiniteQuandle& q, const std::vector<Index>& rdiv,
                                     const std::vector<Index>& gens) {
  const std::size_t n = q.order();
  std::vector<bool> in(n, false);
  std::vector<Index> queue;
  for (Index g : gens)
    if (!in[g]) {
      in[g] = true;
      queue.push_back(g);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index x = queue[head];
    for (Index g : gens) {
      for (Index y : {q.op(x, g), rdiv[x * n + g]}) {
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return in;
}

std::vector<Index> generating_set_in_order(const FiniteQuandle& q, const std::vector<Index>& rdiv,
                                           const std::vector<Index>& candidates) {
  std::vector<Index> gens;
  std::vector<bool> in(q.order(), false);
  std::size_t covered = 0;
  for (Index x : candidates) {
    if (covered == q.order()) break;
    if (in[x]) continue;
    gens.push_back(x);
    in = subquandle_closure(q, rdiv, gens);
    covered = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  }
  return gens;
}

// Extends images of gens[0..depth) along right translations by those
// generators. Returns nullopt on a conflict (or, with `injective`, on a
// collision). Unreached elements stay kUnset.
std::optional<std::vector<Index>> extend_map(const FiniteQuandle& src,
                                             const std::vector<Index>& src_rdiv,
                                             const FiniteQuandle& dst,
                                             const std::vector<Index>& dst_rdiv,
                                             const std::vector<Index>& gens,
                                             const std::vector<Index>& images, std::size_t depth,
                                             bool injective) {
  const std::size_t n = src.order();
  const std::size_t m = dst.order();
  std::vector<Index> h(n, kUnset);
  std::vector<bool> used(injective ? m : 0, false);
  std::vector<Index> queue;
  auto assign = [&](Index x, Index v) {
    if (h[x] == kUnset) {
      if (injective) {
        if (used[v]) return false;
        used[v] = true;
      }
      h[x] = v;
      queue.push_back(x);
      return true;
    }
    return h[x] == v;
  };
  for (std::size_t i = 0; i < depth; ++i)
    if (!assign(gens[i], images[i])) return std::nullopt;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index x = queue[head];
    for (std::size_t i = 0; i < depth; ++i) {
      const Index g = gens[i];
      const Index hg = images[i];
      if (!assign(src.op(x, g), dst.op(h[x], hg))) return std::nullopt;
      if (!assign(src_rdiv[x * n + g], dst_rdiv[h[x] * m + hg])) return std::nullopt;
    }
  }
  return h;
}

bool is_homomorphism(const FiniteQuandle& src, const FiniteQuandle& dst,
                     const std::vector<Index>& h) {
  for (Index x = 0; x < src.order(); ++x)
    for (Index y = 0; y < src.order(); ++y)
      if (h[src.op(x, y)] != dst.op(h[x], h[y])) return false;
  return true;
}

struct LocalKey {
  std::vector<std::size_t> cycles;
  std::size_t orbit_size;
  std::size_t row_fixed;
  auto operator<=>(const LocalKey&) const = default;
};

std::vector<LocalKey> local_keys(const FiniteQuandle& q) {
  std::vector<std::size_t> orbit_size(q.order());
  for (const auto& block : orbits(q))
    for (Index x : block) orbit_size[x] = block.size();
  std::vector<LocalKey> keys;
  for (Index x = 0; x < q.order(); ++x) {
    std::size_t fixed = 0;
    for (Index y = 0; y < q.order(); ++y)
      if (q.op(x, y) == x) ++fixed;
    keys.push_back({cycle_type(q.column(x)), orbit_size[x], fixed});
  }
  return keys;
}

}  // namespace

std::vector<Index> quandle_generating_set(const FiniteQuandle& q) {
  std::vector<Index> all(q.order());
  std::iota(all.begin(), all.end(), Index{0});
  return generating_set_in_order(q, right_division(q), all);
}

std::uint64_t hom_count(const FiniteQuandle& src, const FiniteQuandle& dst) {
  const auto src_rdiv = right_division(src);
  const auto dst_rdiv = right_division(dst);
  std::vector<Index> all(src.order());
  std::iota(all.begin(), all.end(), Index{0});
  const auto gens = generating_set_in_order(src, src_rdiv, all);
  std::vector<Index> images(gens.size());
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      ++count;
      return;
    }
    for (Index v = 0; v < dst.order(); ++v) {
      images[depth] = v;
      if (extend_map(src, src_rdiv, dst, dst_rdiv, gens, images, depth + 1, false))
        self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return count;
}

std::uint64_t colorings(const FiniteQuandle& q, std::size_t m) {
  return hom_count(q, FiniteQuandle::dihedral(m));
}

QuandleProfile profile(const FiniteQuandle& q) {
  QuandleProfile p;
  p.order = q.order();
  p.type = type_of(q);
  for (const auto& block : orbits(q)) p.orbit_sizes.push_back(block.size());
  std::sort(p.orbit_sizes.begin(), p.orbit_sizes.end());
  for (Index y = 0; y < q.order(); ++y) p.s_cycle_profile.push_back(cycle_type(q.column(y)));
  std::sort(p.s_cycle_profile.begin(), p.s_cycle_profile.end());
  p.inner_group_order = inner_group_order(q);
  return p;
}

std::optional<Perm> isomorphic(const FiniteQuandle& q1, const FiniteQuandle& q2) {
  if (q1.order() != q2.order()) return std::nullopt;
  if (profile(q1) != profile(q2)) return std::nullopt;
  const auto keys1 = local_keys(q1);
  const auto keys2 = local_keys(q2);
  std::map<LocalKey, std::size_t> freq1;
  std::map<LocalKey, std::size_t> freq2;
  for (const auto& k : keys1) ++freq1[k];
  for (const auto& k : keys2) ++freq2[k];
  if (freq1 != freq2) return std::nullopt;

  // Rare local invariants first: they admit the fewest candidate images.
  std::vector<Index> order(q1.order());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return freq1[keys1[a]] < freq1[keys1[b]]; });
  const auto rdiv1 = right_division(q1);
  const auto rdiv2 = right_division(q2);
  const auto gens = generating_set_in_order(q1, rdiv1, order);

  std::vector<std::vector<Index>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Index y = 0; y < q2.order(); ++y)
      if (keys2[y] == keys1[gens[i]]) candidates[i].push_back(y);

  std::vector<Index> images(gens.size());
  std::optional<Perm> witness;
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      auto h = extend_map(q1, rdiv1, q2, rdiv2, gens, images, depth, true);
      if (h && is_homomorphism(q1, q2, *h)) {
        witness = std::move(*h);
        return true;
      }
      return false;
    }
    for (Index c : candidates[depth]) {
      images[depth] = c;
      if (!extend_map(q1, rdiv1, q2, rdiv2, gens, images, depth + 1, true)) continue;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return witness;
}

GroupAutomorphism find_monodromy(const FiniteGroup& g, std::uint64_t n,
                                 const FiniteQuandle& target) {
  if (g.order() != target.order())
    throw InvalidArgument("group order " + std::to_string(g.order()) +
                          " differs from quandle order " + std::to_string(target.order()));
  for (const GroupAutomorphism& f : automorphisms(g)) {
    if (automorphism_order(f) != n) continue;
    if (isomorphic(galex(g, f), target)) return f;
  }
  throw NotFound("no automorphism of order " + std::to_string(n) +
                 " realizes the target quandle");
}

namespace {

std::vector<Index> canonical_table(const std::vector<Index>& t, std::size_t n) {
  Perm pi = identity_perm(n);
  std::vector<Index> best;
  std::vector<Index> cur(n * n);
  do {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) cur[pi[x] * n + pi[y]] = pi[t[x * n + y]];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

}  // namespace

std::vector<FiniteQuandle> enumerate_quandles(std::size_t order) {
  if (order == 0 || order > 5) throw InvalidArgument("enumerate_quandles supports orders 1..5");
  const std::size_t n = order;
  // Candidate right translations for each y: permutations fixing y.
  std::vector<std::vector<Perm>> choices(n);
  for (std::size_t y = 0; y < n; ++y) {
    Perm p = identity_perm(n);
    do {
      if (p[y] == y) choices[y].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<Perm> cols(n);
  std::set<std::vector<Index>> classes;

  // S_z S_y = S_{S_z(y)} S_z, read left to right on x: (x*y)*z = (x*z)*(y*z).
  auto consistent = [&](std::size_t assigned) {
    for (std::size_t y = 0; y < assigned; ++y)
      for (std::size_t z = 0; z < assigned; ++z) {
        const std::size_t w = cols[z][y];
        if (w >= assigned) continue;
        if (y + 1 != assigned && z + 1 != assigned && w + 1 != assigned) continue;
        for (std::size_t x = 0; x < n; ++x)
          if (cols[z][cols[y][x]] != cols[w][cols[z][x]]) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t y) -> void {
    if (y == n) {
      std::vector<Index> t(n * n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t c = 0; c < n; ++c) t[x * n + c] = cols[c][x];
      classes.insert(canonical_table(t, n));
      return;
    }
    for (const Perm& p : choices[y]) {
      cols[y] = p;
      if (consistent(y + 1)) self(self, y + 1);
    }
  };
  rec(rec, 0);
  std::vector<FiniteQuandle> out;
  for (const auto& t : classes) out.emplace_back(n, t);
  return out;
}

FiniteQuandle read_quandle_table(std::istream& in) {
  detail::TableReader reader(in);
  const std::size_t n = reader.header("quandle");
  std::vector<Index> table(n * n);
  for (auto& v : table) v = reader.entry(n);
  reader.finish();
  return FiniteQuandle(n, std::move(table));
}

void write_quandle_table(std::ostream& out, const FiniteQuandle& q) {
  detail::write_table(out, "quandle", q.order(), q.table());
}

}  // namespace qf
