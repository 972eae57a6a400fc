#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qf {

using Index = std::uint32_t;

/// A permutation of {0, ..., n-1} stored as its image list.
using Perm = std::vector<Index>;

Perm identity_perm(std::size_t n);

/// Composition in left-to-right order: the result maps x to second[first[x]].
Perm compose(const Perm& first, const Perm& second);

Perm inverse(const Perm& p);

bool is_permutation(std::span<const Index> images);

bool is_identity(const Perm& p);

/// Least m > 0 with p^m = id.
std::uint64_t perm_order(const Perm& p);

/// p^s for any integer s (negative powers use the inverse).
Perm perm_power(const Perm& p, std::int64_t s);

/// Cycle lengths, sorted in decreasing order (fixed points included).
std::vector<std::size_t> cycle_type(const Perm& p);

/// Order of the permutation group generated by `gens` on `degree` points,
/// computed with the deterministic Schreier-Sims algorithm.
std::uint64_t permutation_group_order(std::span<const Perm> gens, std::size_t degree);

}  // namespace qf
