#include "coset_table.hpp"

#include <algorithm>
#include <utility>

#include "qf/errors.hpp"

namespace qf::detail {

Word invert(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (Column& c : r) c = inverse_column(c);
  return r;
}

void free_reduce(Word& w) {
  std::size_t out = 0;
  for (Column c : w) {
    if (out > 0 && w[out - 1] == inverse_column(c)) {
      --out;
    } else {
      w[out++] = c;
    }
  }
  w.resize(out);
}

void cyclic_reduce(Word& w) {
  free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == inverse_column(w[hi - 1])) {
    ++lo;
    --hi;
  }
  w = Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word concat(std::initializer_list<const Word*> parts) {
  Word out;
  for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

CosetTable::CosetTable(std::size_t generators, std::size_t budget)
    : gens_(generators), budget_(budget) {}

Index CosetTable::add_row(std::size_t base, Word rep) {
  if (parent_.size() >= budget_) throw BudgetExceeded(budget_);
  const auto id = static_cast<Index>(parent_.size());
  parent_.push_back(id);
  base_.push_back(base);
  reps_.push_back(std::move(rep));
  table_.resize(table_.size() + columns(), kUndefined);
  ++stats_.allocated;
  return id;
}

Index CosetTable::find(Index c) {
  Index root = c;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[c] != root) {
    const Index next = parent_[c];
    parent_[c] = root;
    c = next;
  }
  return root;
}

Index CosetTable::define(Index c, Column x) {
  Word rep = reps_[c];
  rep.push_back(x);
  free_reduce(rep);
  const Index d = add_row(base_[c], std::move(rep));
  set(c, x, d);
  set(d, inverse_column(x), c);
  touched_.emplace_back(c, x);
  ++stats_.definitions;
  return d;
}

void CosetTable::record(Index c, Column x) {
  touched_.emplace_back(c, x);
  if (x & 1u) {
    new_entries_.emplace_back(get(c, x), inverse_column(x));
  } else {
    new_entries_.emplace_back(c, x);
  }
}

void CosetTable::deduce(Index c, Column x, Index d) {
  set(c, x, d);
  set(d, inverse_column(x), c);
  ++stats_.deductions;
  record(c, x);
}

void CosetTable::merge(Index a, Index b, std::vector<Index>& queue) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (b < a) std::swap(a, b);
  parent_[b] = a;
  queue.push_back(b);
  ++stats_.merges;
}

void CosetTable::coincidence(Index a, Index b) {
  std::vector<Index> queue;
  merge(a, b, queue);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index dead = queue[head];
    for (Column x = 0; x < columns(); ++x) {
      const Index f = get(dead, x);
      if (f == kUndefined) continue;
      const Column xi = inverse_column(x);
      if (get(f, xi) == dead) set(f, xi, kUndefined);
      const Index e1 = find(dead);
      const Index f1 = find(f);
      if (get(e1, x) != kUndefined) {
        merge(f1, get(e1, x), queue);
      } else if (get(f1, xi) != kUndefined) {
        merge(e1, get(f1, xi), queue);
      } else {
        set(e1, x, f1);
        set(f1, xi, e1);
        record(e1, x);
      }
    }
  }
}

void CosetTable::scan_and_fill(Index c, const Word& w) {
  if (w.empty()) return;
  Index f = c;
  Index b = c;
  std::size_t i = 0;
  std::size_t j = w.size();  // exclusive upper bound of the unscanned part
  for (;;) {
    while (i < j && get(f, w[i]) != kUndefined) f = get(f, w[i++]);
    if (i == j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j > i && get(b, inverse_column(w[j - 1])) != kUndefined)
      b = get(b, inverse_column(w[--j]));
    if (j == i) {
      coincidence(f, b);
      return;
    }
    if (j == i + 1) {
      deduce(f, w[i], b);
      return;
    }
    define(f, w[i]);
  }
}

void CosetTable::scan(Index c, const Word& w) {
  if (w.empty()) return;
  Index f = c;
  std::size_t i = 0;
  while (i < w.size() && get(f, w[i]) != kUndefined) f = get(f, w[i++]);
  if (i == w.size()) {
    if (f != c) coincidence(f, c);
    return;
  }
  Index b = c;
  std::size_t j = w.size();
  while (j > i && get(b, inverse_column(w[j - 1])) != kUndefined)
    b = get(b, inverse_column(w[--j]));
  if (j == i) {
    coincidence(f, b);
  } else if (j == i + 1) {
    deduce(f, w[i], b);
  }
}

Index CosetTable::trace_define(Index c, const Word& w) {
  for (Column x : w) {
    Index next = get(c, x);
    if (next == kUndefined) next = define(c, x);
    c = next;
  }
  return c;
}

Index CosetTable::trace(Index c, const Word& w) const {
  for (Column x : w) {
    c = get(c, x);
    if (c == kUndefined) return kUndefined;
  }
  return c;
}

std::vector<Index> CosetTable::live_rows() const {
  std::vector<Index> out;
  for (Index c = 0; c < parent_.size(); ++c)
    if (parent_[c] == c) out.push_back(c);
  return out;
}

std::vector<std::pair<Index, Column>> CosetTable::take_new_entries() {
  return std::exchange(new_entries_, {});
}

std::vector<std::pair<Index, Column>> CosetTable::take_touched() {
  return std::exchange(touched_, {});
}

}  // namespace qf::detail
