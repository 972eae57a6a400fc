#include "qf/group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "coset_table.hpp"
#include "lexer.hpp"
#include "qf/errors.hpp"
#include "table_io.hpp"

namespace qf {

namespace {

std::optional<Index> find_identity(std::size_t n, const std::vector<Index>& t) {
  for (Index e = 0; e < n; ++e) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) ok = t[e * n + x] == x && t[x * n + e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Index> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0) throw InvalidArgument("group order must be positive");
  if (table_.size() != order_ * order_) throw InvalidArgument("group table has the wrong size");
  for (Index v : table_)
    if (v >= order_) throw InvalidArgument("group table entry out of range");
  index_identity_and_inverses();
  for (Index x = 0; x < order_; ++x)
    for (Index y = 0; y < order_; ++y) {
      const Index xy = mul(x, y);
      for (Index z = 0; z < order_; ++z)
        if (mul(xy, z) != mul(x, mul(y, z)))
          throw InvalidArgument("group table is not associative");
    }
}

FiniteGroup::FiniteGroup(Trusted, std::size_t order, std::vector<Index> table)
    : order_(order), table_(std::move(table)) {
  index_identity_and_inverses();
}

void FiniteGroup::index_identity_and_inverses() {
  const auto e = find_identity(order_, table_);
  if (!e) throw InvalidArgument("group table has no two-sided identity");
  identity_ = *e;
  inv_.assign(order_, 0);
  for (Index x = 0; x < order_; ++x) {
    bool found = false;
    for (Index y = 0; y < order_ && !found; ++y) {
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inv_[x] = y;
        found = true;
      }
    }
    if (!found) throw InvalidArgument("element " + std::to_string(x) + " has no inverse");
  }
}

FiniteGroup FiniteGroup::from_rows(const std::vector<std::vector<Index>>& rows) {
  std::vector<Index> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw InvalidArgument("group table must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteGroup(rows.size(), std::move(flat));
}

FiniteGroup FiniteGroup::from_permutations(std::span<const Perm> gens, std::size_t cap) {
  const std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (const Perm& g : gens)
    if (g.size() != degree || !is_permutation(g))
      throw InvalidArgument("generators must be permutations of equal degree");
  std::vector<Perm> elements{identity_perm(degree)};
  std::map<Perm, Index> index{{elements[0], 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& g : gens) {
      Perm y = compose(elements[head], g);
      if (index.contains(y)) continue;
      if (elements.size() >= cap) throw CapExceeded(elements.size() + 1, cap);
      index.emplace(y, static_cast<Index>(elements.size()));
      elements.push_back(std::move(y));
    }
  }
  const std::size_t n = elements.size();
  std::vector<Index> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = index.at(compose(elements[x], elements[y]));
  return FiniteGroup(Trusted{}, n, std::move(table));
}

FiniteGroup FiniteGroup::cyclic(std::size_t m) {
  if (m == 0) throw InvalidArgument("cyclic group order must be positive");
  std::vector<Index> table(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) table[x * m + y] = static_cast<Index>((x + y) % m);
  return FiniteGroup(Trusted{}, m, std::move(table));
}

GroupAutomorphism::GroupAutomorphism(const FiniteGroup& g, Perm images)
    : images_(std::move(images)) {
  if (images_.size() != g.order() || !is_permutation(images_))
    throw InvalidArgument("automorphism must be a permutation of the group elements");
  for (Index x = 0; x < g.order(); ++x)
    for (Index y = 0; y < g.order(); ++y)
      if (images_[g.mul(x, y)] != g.mul(images_[x], images_[y]))
        throw InvalidArgument("map does not respect multiplication");
}

GroupAutomorphism GroupAutomorphism::identity(const FiniteGroup& g) {
  return GroupAutomorphism(Unchecked{}, identity_perm(g.order()));
}

// ---------------------------------------------------------------------------
// Presentations

namespace {

using detail::Lexer;
using detail::Tok;

class GroupParser {
 public:
  explicit GroupParser(std::string_view text) : lex_(text) {}

  GroupPresentation parse() {
    GroupPresentation p;
    const Token kw = lex_.peek();
    if (!lex_.at(Tok::Ident) || kw.text != "group") lex_.fail({"'group'"});
    lex_.next();
    lex_.expect(Tok::LAngle);
    do {
      if (!lex_.at(Tok::Ident)) lex_.fail({"generator name"});
      const auto& name = lex_.peek().text;
      if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end())
        lex_.fail({"a generator name not already declared"});
      p.generators.push_back(lex_.next().text);
    } while (lex_.accept(Tok::Comma));
    gens_ = &p.generators;
    lex_.expect(Tok::Bar);
    if (!lex_.at(Tok::RAngle)) {
      do {
        relation(p.relators);
      } while (lex_.accept(Tok::Comma));
    }
    if (!lex_.at(Tok::RAngle)) lex_.fail({"','", "'='", "'*'", "'>'"});
    lex_.next();
    if (!lex_.at(Tok::End)) lex_.fail({"end of input"});
    return p;
  }

 private:
  using Token = detail::Token;

  void relation(std::vector<GroupWord>& out) {
    GroupWord prev = word();
    bool chained = false;
    while (lex_.accept(Tok::Eq)) {
      GroupWord cur = word();
      GroupWord rel = prev;
      for (auto it = cur.rbegin(); it != cur.rend(); ++it) rel.push_back({it->generator, !it->inverse});
      out.push_back(std::move(rel));
      prev = std::move(cur);
      chained = true;
    }
    if (!chained) out.push_back(std::move(prev));
  }

  GroupWord word() {
    GroupWord w = factor();
    while (lex_.accept(Tok::Star)) {
      GroupWord f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  GroupWord factor() {
    GroupWord base = atom();
    if (!lex_.accept(Tok::Caret)) return base;
    const bool negative = lex_.accept(Tok::Minus);
    if (!lex_.at(Tok::Int)) lex_.fail({"integer exponent"});
    const long e = std::stol(lex_.next().text);
    if (negative) {
      GroupWord inv;
      for (auto it = base.rbegin(); it != base.rend(); ++it) inv.push_back({it->generator, !it->inverse});
      base = std::move(inv);
    }
    GroupWord out;
    for (long i = 0; i < e; ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  GroupWord atom() {
    if (lex_.at(Tok::Ident)) {
      const auto it = std::find(gens_->begin(), gens_->end(), lex_.peek().text);
      if (it == gens_->end()) lex_.fail({"declared generator"});
      lex_.next();
      return {Letter{static_cast<std::size_t>(it - gens_->begin()), false}};
    }
    if (lex_.at(Tok::Int) && lex_.peek().text == "1") {
      lex_.next();
      return {};
    }
    if (lex_.accept(Tok::LParen)) {
      GroupWord w = word();
      lex_.expect(Tok::RParen);
      return w;
    }
    lex_.fail({"generator", "'1'", "'('"});
  }

  Lexer lex_;
  const std::vector<std::string>* gens_ = nullptr;
};

}  // namespace

GroupPresentation parse_group_presentation(std::string_view text) {
  return GroupParser(text).parse();
}

std::string to_string(const GroupPresentation& p) {
  std::ostringstream out;
  out << "group<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) out << (i ? "," : "") << p.generators[i];
  out << " | ";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (r) out << ", ";
    const GroupWord& w = p.relators[r];
    if (w.empty()) out << "1";
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      const long run = static_cast<long>(j - i) * (w[i].inverse ? -1 : 1);
      out << (i ? "*" : "") << p.generators[w[i].generator];
      if (run != 1) out << "^" << run;
      i = j;
    }
  }
  out << ">";
  return out.str();
}

FiniteGroup group_from_presentation(const GroupPresentation& p, std::size_t budget) {
  using namespace detail;
  const std::size_t k = p.generators.size();
  std::vector<Word> relators;
  for (const GroupWord& gw : p.relators) {
    Word w;
    for (const Letter& l : gw) {
      if (l.generator >= k) throw InvalidArgument("relator mentions an undeclared generator");
      w.push_back(forward_column(l.generator) | (l.inverse ? 1u : 0u));
    }
    cyclic_reduce(w);
    if (!w.empty()) relators.push_back(std::move(w));
  }

  CosetTable t(k, budget);
  t.add_row(0, {});
  for (Index c = 0; c < t.size(); ++c) {
    if (!t.alive(c)) continue;
    for (const Word& r : relators) {
      t.scan_and_fill(c, r);
      if (!t.alive(c)) break;
    }
    if (!t.alive(c)) continue;
    for (Column x = 0; x < t.columns(); ++x)
      if (t.get(c, x) == kUndefined) t.define(c, x);
  }

  const std::vector<Index> live = t.live_rows();
  std::vector<Index> number(t.size(), kUndefined);
  for (std::size_t i = 0; i < live.size(); ++i) number[live[i]] = static_cast<Index>(i);
  const std::size_t n = live.size();
  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = number[t.find(t.trace(live[a], t.rep(live[b])))];
  return FiniteGroup(FiniteGroup::Trusted{}, n, std::move(table));
}

// ---------------------------------------------------------------------------
// Element and automorphism arithmetic

std::uint64_t element_order(const FiniteGroup& g, Index x) {
  if (x >= g.order()) throw InvalidArgument("element index out of range");
  std::uint64_t m = 1;
  for (Index y = x; y != g.identity(); y = g.mul(y, x)) ++m;
  return m;
}

std::map<std::uint64_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::uint64_t, std::size_t> h;
  for (Index x = 0; x < g.order(); ++x) ++h[element_order(g, x)];
  return h;
}

namespace {

std::vector<bool> subgroup_closure(const FiniteGroup& g, const std::vector<Index>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Index> queue{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Index s : gens) {
      const Index y = g.mul(queue[head], s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  return in;
}

// Extends generator images to the subgroup generated by gens[0..depth) along
// the right Cayley graph. Returns the partial map (kUndefined outside the
// subgroup) or nullopt if it is not a well-defined injective homomorphism.
std::optional<Perm> extend_hom(const FiniteGroup& src, const std::vector<Index>& gens,
                               const std::vector<Index>& images, std::size_t depth,
                               const FiniteGroup& dst) {
  Perm phi(src.order(), detail::kUndefined);
  std::vector<bool> used(dst.order(), false);
  phi[src.identity()] = dst.identity();
  used[dst.identity()] = true;
  std::vector<Index> queue{src.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index x = queue[head];
    for (std::size_t i = 0; i < depth; ++i) {
      const Index y = src.mul(x, gens[i]);
      const Index img = dst.mul(phi[x], images[i]);
      if (phi[y] == detail::kUndefined) {
        if (used[img]) return std::nullopt;
        phi[y] = img;
        used[img] = true;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

template <typename Visit>
void search_homs(const FiniteGroup& src, const FiniteGroup& dst, Visit&& visit) {
  const std::vector<Index> gens = generating_set(src);
  std::vector<std::vector<Index>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto ord = element_order(src, gens[i]);
    for (Index y = 0; y < dst.order(); ++y)
      if (element_order(dst, y) == ord) candidates[i].push_back(y);
  }
  std::vector<Index> images(gens.size());
  // Returns false to stop the search.
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      auto phi = extend_hom(src, gens, images, depth, dst);
      if (!phi) return true;
      return visit(std::move(*phi));
    }
    for (Index c : candidates[depth]) {
      images[depth] = c;
      if (!extend_hom(src, gens, images, depth + 1, dst)) continue;
      if (!self(self, depth + 1)) return false;
    }
    return true;
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Index> generating_set(const FiniteGroup& g) {
  std::vector<Index> order(g.order());
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<std::uint64_t> ord(g.order());
  for (Index x = 0; x < g.order(); ++x) ord[x] = element_order(g, x);
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return ord[a] > ord[b]; });
  std::vector<Index> gens;
  std::vector<bool> in = subgroup_closure(g, gens);
  std::size_t covered = 1;
  for (Index x : order) {
    if (covered == g.order()) break;
    if (in[x]) continue;
    gens.push_back(x);
    in = subgroup_closure(g, gens);
    covered = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  }
  return gens;
}

std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded(g.order(), cap);
  std::vector<GroupAutomorphism> out;
  search_homs(g, g, [&](Perm phi) {
    out.push_back(GroupAutomorphism(GroupAutomorphism::Unchecked{}, std::move(phi)));
    return true;
  });
  return out;
}

std::uint64_t automorphism_order(const GroupAutomorphism& f) { return perm_order(f.images()); }

GroupAutomorphism power(const GroupAutomorphism& f, std::int64_t s) {
  return GroupAutomorphism(GroupAutomorphism::Unchecked{}, perm_power(f.images(), s));
}

std::optional<Perm> groups_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2,
                                      std::size_t cap) {
  if (g1.order() > cap) throw CapExceeded(g1.order(), cap);
  if (g2.order() > cap) throw CapExceeded(g2.order(), cap);
  if (g1.order() != g2.order()) return std::nullopt;
  if (order_histogram(g1) != order_histogram(g2)) return std::nullopt;
  std::optional<Perm> witness;
  search_homs(g1, g2, [&](Perm phi) {
    witness = std::move(phi);
    return false;
  });
  return witness;
}

// ---------------------------------------------------------------------------
// Table text format

FiniteGroup read_group_table(std::istream& in) {
  detail::TableReader reader(in);
  const std::size_t n = reader.header("group");
  std::vector<Index> table(n * n);
  for (auto& v : table) v = reader.entry(n);
  reader.finish();
  return FiniteGroup(n, std::move(table));
}

void write_group_table(std::ostream& out, const FiniteGroup& g) {
  detail::write_table(out, "group", g.order(), g.table());
}

}  // namespace qf
