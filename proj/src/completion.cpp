// Saturation of a finitely presented quandle into an operation table.
//
// Every element is written x_b . W: a generator x_b moved by a word W of
// right translations by generators and their inverses. The table stores only
// the generator columns; the translation by an arbitrary element e = x_b . W
// is the operator S_e = W^-1 x_b W. Rows are enumerated like cosets, and the
// quandle axioms become operator relators:
//   * x_b * x_b = x_b for every generator (idempotence of all elements then
//     follows from the normal form);
//   * for every entry e . x = f the operators must agree, S_f = x^-1 S_e x
//     (self-distributivity), giving the relator x^-1 S_e x S_f^-1 which is
//     traced at every row;
//   * each defining relation is an identification of two points.
// Relators harvested from deductions are traced HLT-style at every live row,
// and whole passes repeat until one pass changes nothing.

#include <set>

#include "coset_table.hpp"
#include "qf/errors.hpp"
#include "qf/presentation.hpp"

namespace qf {

namespace {

using detail::Column;
using detail::CosetTable;
using detail::forward_column;
using detail::inverse_column;
using detail::kUndefined;
using detail::Word;

constexpr std::int64_t kMaxExponent = 1'000'000;

struct Point {
  std::size_t base;
  Word word;
};

Point normal_form(const QuandleTerm& t, const QuandlePresentation& p) {
  if (t.is_generator()) return {p.generator_index(t.name()), {}};
  Point left = normal_form(t.left(), p);
  const Point right = normal_form(t.right(), p);
  const std::int64_t e = t.exponent();
  if (e > kMaxExponent || e < -kMaxExponent)
    throw InvalidArgument("exponent " + std::to_string(e) + " is too large");
  Word w = std::move(left.word);
  const Word inv = detail::invert(right.word);
  w.insert(w.end(), inv.begin(), inv.end());
  const Column x = forward_column(right.base) | (e < 0 ? 1u : 0u);
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) w.push_back(x);
  w.insert(w.end(), right.word.begin(), right.word.end());
  detail::free_reduce(w);
  return {left.base, std::move(w)};
}

class Saturation {
 public:
  Saturation(const QuandlePresentation& p, std::size_t budget)
      : p_(p), table_(p.generators().size(), budget), through_(2 * p.generators().size()) {
    for (std::size_t i = 0; i < p.generators().size(); ++i) table_.add_row(i, {});
    for (const auto& r : p.relations())
      relations_.emplace_back(normal_form(r.lhs, p), normal_form(r.rhs, p));
  }

  CompletionResult run() {
    std::size_t passes = 0;
    for (;;) {
      ++passes;
      const auto before = table_.stats();
      enforce_relations();
      enforce_idempotence();
      settle();
      for (Index c = 0; c < table_.size(); ++c) {
        for (Column x = 0; x < table_.columns() && table_.alive(c); ++x) {
          if (table_.get(c, x) != kUndefined) continue;
          table_.define(c, x);
          settle();
        }
      }
      const auto& after = table_.stats();
      if (after.definitions == before.definitions && after.deductions == before.deductions &&
          after.merges == before.merges)
        break;
    }
    return extract(passes);
  }

 private:
  Word operator_word(Index e) const {
    Word w = detail::invert(table_.rep(e));
    w.push_back(forward_column(table_.base(e)));
    w.insert(w.end(), table_.rep(e).begin(), table_.rep(e).end());
    return w;
  }

  void enforce_relations() {
    for (const auto& [lhs, rhs] : relations_) {
      const Index a = table_.trace_define(table_.find(static_cast<Index>(lhs.base)), lhs.word);
      const Index b = table_.trace_define(table_.find(static_cast<Index>(rhs.base)), rhs.word);
      if (table_.find(a) != table_.find(b)) table_.coincidence(a, b);
    }
  }

  void enforce_idempotence() {
    for (std::size_t i = 0; i < p_.generators().size(); ++i) {
      const Index g = table_.find(static_cast<Index>(i));
      const Column x = forward_column(i);
      const Index h = table_.get(g, x);
      if (h == kUndefined) {
        const Index back = table_.get(g, inverse_column(x));
        if (back == kUndefined) {
          table_.deduce(g, x, g);
        } else {
          table_.coincidence(back, g);
        }
      } else if (h != g) {
        table_.coincidence(g, h);
      }
    }
  }

  // Felsch-style closure: every relator occurrence through a freshly set
  // entry is scanned, and a relator learned from a deduction is scanned at
  // every live row once.
  void settle() {
    for (;;) {
      auto touched = table_.take_touched();
      if (touched.empty()) {
        const std::vector<Word> fresh = harvest();
        if (fresh.empty()) return;
        for (const Word& r : fresh)
          for (Index c = 0; c < table_.size(); ++c)
            if (table_.alive(c)) table_.scan(c, r);
        continue;
      }
      for (const auto& [c0, x] : touched) {
        const Index c = table_.find(c0);
        const Index d = table_.get(c, x);
        if (d == kUndefined) continue;
        for (const Word& w : through_[x]) {
          if (!table_.alive(c)) break;
          table_.scan(c, w);
        }
      }
    }
  }

  std::vector<Word> harvest() {
    std::vector<Word> fresh;
    for (const auto& [c, x] : table_.take_new_entries()) {
      if (!table_.alive(c)) continue;
      const Index f = table_.get(c, x);
      if (f == kUndefined) continue;
      Word r{inverse_column(x)};
      const Word se = operator_word(c);
      r.insert(r.end(), se.begin(), se.end());
      r.push_back(x);
      const Word sf = detail::invert(operator_word(f));
      r.insert(r.end(), sf.begin(), sf.end());
      detail::cyclic_reduce(r);
      if (r.empty()) continue;
      Word key = canonical(r);
      if (!relators_.insert(key).second) continue;
      add_rotations(key);
      fresh.push_back(std::move(key));
    }
    return fresh;
  }

  // Least rotation of w or of its inverse: one representative per relator.
  static Word canonical(const Word& w) {
    Word best = w;
    for (const Word& v : {w, detail::invert(w)})
      for (std::size_t k = 0; k < v.size(); ++k) {
        Word r(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
        r.insert(r.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
        if (r < best) best = std::move(r);
      }
    return best;
  }

  void add_rotations(const Word& w) {
    std::set<Word> seen;
    for (const Word& v : {w, detail::invert(w)})
      for (std::size_t k = 0; k < v.size(); ++k) {
        Word r(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
        r.insert(r.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
        if (seen.insert(r).second) through_[r.front()].push_back(std::move(r));
      }
  }

  CompletionResult extract(std::size_t passes) {
    const std::vector<Index> live = table_.live_rows();
    const std::size_t n = live.size();
    std::vector<Index> number(table_.size(), kUndefined);
    for (std::size_t i = 0; i < n; ++i) number[live[i]] = static_cast<Index>(i);
    std::vector<Index> t(n * n);
    for (std::size_t j = 0; j < n; ++j) {
      const Word s = operator_word(live[j]);
      for (std::size_t i = 0; i < n; ++i) t[i * n + j] = number[table_.trace(live[i], s)];
    }
    CompletionResult result{FiniteQuandle(n, std::move(t)), {}, {}};
    for (std::size_t i = 0; i < p_.generators().size(); ++i)
      result.generator_images.emplace_back(p_.generators()[i],
                                           number[table_.find(static_cast<Index>(i))]);
    result.stats.allocated = table_.stats().allocated;
    result.stats.merges = table_.stats().merges;
    result.stats.passes = passes;
    result.stats.relators = relators_.size();
    return result;
  }

  const QuandlePresentation& p_;
  CosetTable table_;
  std::vector<std::pair<Point, Point>> relations_;
  std::set<Word> relators_;
  std::vector<std::vector<Word>> through_;
};

}  // namespace

CompletionResult complete(const QuandlePresentation& p, std::size_t budget) {
  if (budget == 0) throw InvalidArgument("budget must be positive");
  return Saturation(p, budget).run();
}

}  // namespace qf
