#include "qf/perm.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace qf {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Index{0});
  return p;
}

Perm compose(const Perm& first, const Perm& second) {
  Perm r(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) r[x] = second[first[x]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<Index>(x);
  return r;
}

bool is_permutation(std::span<const Index> images) {
  std::vector<bool> seen(images.size(), false);
  for (Index v : images) {
    if (v >= images.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != x) return false;
  return true;
}

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::uint64_t perm_order(const Perm& p) {
  std::uint64_t order = 1;
  for (std::size_t len : cycle_type(p)) order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

Perm perm_power(const Perm& p, std::int64_t s) {
  const auto order = static_cast<std::int64_t>(perm_order(p));
  std::int64_t e = ((s % order) + order) % order;
  Perm result = identity_perm(p.size());
  Perm base = p;
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

namespace {

// Stabiliser chain for Holt's deterministic Schreier-Sims.
class StabilizerChain {
 public:
  StabilizerChain(std::span<const Perm> gens, std::size_t degree) : degree_(degree) {
    for (const Perm& g : gens) {
      if (is_identity(g)) continue;
      if (std::find(strong_.begin(), strong_.end(), g) == strong_.end()) strong_.push_back(g);
    }
    for (const Perm& g : strong_) {
      if (std::none_of(base_.begin(), base_.end(), [&](Index b) { return g[b] != b; }))
        base_.push_back(first_moved(g));
    }
    transversals_.resize(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) rebuild(i);
    run();
  }

  std::uint64_t order() const {
    std::uint64_t total = 1;
    for (const auto& t : transversals_) {
      std::uint64_t orbit = 0;
      for (const auto& u : t)
        if (u) ++orbit;
      total *= orbit;
    }
    return total;
  }

 private:
  static Index first_moved(const Perm& g) {
    for (std::size_t x = 0; x < g.size(); ++x)
      if (g[x] != x) return static_cast<Index>(x);
    return 0;
  }

  bool fixes_prefix(const Perm& g, std::size_t level) const {
    for (std::size_t j = 0; j < level; ++j)
      if (g[base_[j]] != base_[j]) return false;
    return true;
  }

  std::vector<const Perm*> level_gens(std::size_t level) const {
    std::vector<const Perm*> out;
    for (const Perm& g : strong_)
      if (fixes_prefix(g, level)) out.push_back(&g);
    return out;
  }

  void rebuild(std::size_t level) {
    auto& u = transversals_[level];
    u.assign(degree_, std::nullopt);
    const Index b = base_[level];
    u[b] = identity_perm(degree_);
    std::vector<Index> queue{b};
    const auto gens = level_gens(level);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index x = queue[head];
      for (const Perm* g : gens) {
        const Index y = (*g)[x];
        if (!u[y]) {
          u[y] = compose(*u[x], *g);
          queue.push_back(y);
        }
      }
    }
  }

  // Returns the residue and the level at which sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
    for (std::size_t i = from; i < base_.size(); ++i) {
      const Index img = g[base_[i]];
      const auto& u = transversals_[i][img];
      if (!u) return {std::move(g), i};
      g = compose(g, inverse(*u));
    }
    return {std::move(g), base_.size()};
  }

  void run() {
    if (base_.empty()) return;
    std::size_t i = base_.size();
    while (i-- > 0) {
      if (!process_level(i)) continue;
      // A new strong generator was added below level i; restart from the
      // deepest affected level.
      i = base_.size();
    }
  }

  // Checks every Schreier generator at `level`; on the first one that does
  // not sift, adds its residue and returns true.
  bool process_level(std::size_t level) {
    const auto gens = level_gens(level);
    const auto& u = transversals_[level];
    for (std::size_t x = 0; x < degree_; ++x) {
      if (!u[x]) continue;
      for (const Perm* s : gens) {
        const Index y = (*s)[x];
        Perm h = compose(compose(*u[x], *s), inverse(*u[y]));
        if (is_identity(h)) continue;
        auto [residue, stop] = sift(std::move(h), level + 1);
        if (stop == base_.size() && is_identity(residue)) continue;
        strong_.push_back(residue);
        if (stop == base_.size()) {
          base_.push_back(first_moved(residue));
          transversals_.emplace_back();
        }
        for (std::size_t l = level + 1; l <= stop && l < base_.size(); ++l) rebuild(l);
        return true;
      }
    }
    return false;
  }

  std::size_t degree_;
  std::vector<Perm> strong_;
  std::vector<Index> base_;
  std::vector<std::vector<std::optional<Perm>>> transversals_;
};

}  // namespace

std::uint64_t permutation_group_order(std::span<const Perm> gens, std::size_t degree) {
  if (degree == 0) return 1;
  return StabilizerChain(gens, degree).order();
}

}  // namespace qf
