#pragma once

// Coset table shared by group enumeration and quandle completion.
//
// Columns come in inverse pairs: column 2g is generator g acting on the
// right, column 2g+1 is its inverse, so `col ^ 1` flips a column. Rows are
// allocated on demand and identified through a union-find forest; the
// survivor of a merge is always the smaller index, so coset 0 and any other
// early row stays put.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "qf/perm.hpp"

namespace qf::detail {

using Column = std::uint32_t;
using Word = std::vector<Column>;

inline constexpr Index kUndefined = std::numeric_limits<Index>::max();

inline constexpr Column forward_column(std::size_t gen) { return static_cast<Column>(2 * gen); }
inline constexpr Column inverse_column(Column c) { return c ^ 1u; }

Word invert(const Word& w);
void free_reduce(Word& w);
void cyclic_reduce(Word& w);
Word concat(std::initializer_list<const Word*> parts);

struct CosetStats {
  std::size_t allocated = 0;
  std::size_t definitions = 0;
  std::size_t deductions = 0;
  std::size_t merges = 0;
};

class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t budget);

  std::size_t generators() const noexcept { return gens_; }
  std::size_t columns() const noexcept { return 2 * gens_; }
  std::size_t size() const noexcept { return parent_.size(); }
  const CosetStats& stats() const noexcept { return stats_; }

  /// Allocates a row with the given base point and representative word.
  Index add_row(std::size_t base, Word rep);

  bool alive(Index c) const { return parent_[c] == c; }
  Index find(Index c);

  Index get(Index c, Column x) const { return table_[c * columns() + x]; }

  std::size_t base(Index c) const { return base_[c]; }
  const Word& rep(Index c) const { return reps_[c]; }

  /// New row d with c.x = d; its representative is rep(c).x.
  Index define(Index c, Column x);

  /// Sets c.x = d and d.x^-1 = c, both previously undefined.
  void deduce(Index c, Column x, Index d);

  /// Identifies two rows and propagates every consequence.
  void coincidence(Index a, Index b);

  /// HLT scan of a relator at row c, defining rows as needed.
  void scan_and_fill(Index c, const Word& w);

  /// Scan of a relator at row c without defining rows: a single gap becomes
  /// a deduction, a closed scan with mismatched ends a coincidence.
  void scan(Index c, const Word& w);

  /// Follows w from c, defining missing entries; returns the end row.
  Index trace_define(Index c, const Word& w);

  /// Follows w from c without defining; kUndefined if the path breaks.
  Index trace(Index c, const Word& w) const;

  /// Live rows in increasing index order.
  std::vector<Index> live_rows() const;

  /// Entries set by deduction or coincidence handling since the last call.
  /// Definitions are not reported.
  std::vector<std::pair<Index, Column>> take_new_entries();

  /// Every entry set since the last call, definitions included.
  std::vector<std::pair<Index, Column>> take_touched();

 private:
  void set(Index c, Column x, Index d) { table_[c * columns() + x] = d; }
  void merge(Index a, Index b, std::vector<Index>& queue);
  void record(Index c, Column x);

  std::size_t gens_;
  std::size_t budget_;
  std::vector<Index> table_;
  std::vector<Index> parent_;
  std::vector<std::size_t> base_;
  std::vector<Word> reps_;
  std::vector<std::pair<Index, Column>> new_entries_;
  std::vector<std::pair<Index, Column>> touched_;
  CosetStats stats_;
};

}  // namespace qf::detail
