#pragma once

// Bitset backtracking over one profile box. Internal to the enumeration
// module; instantiated once per kernel family (search_scalar.cpp and
// search_avx2.cpp) and selected at runtime.

#include <cstddef>
#include <cstdint>

namespace csg::detail {

/// Precomputed tables for one class-size vector. Candidates are the nonzero
/// profiles of the box in decreasing lexicographic order (index 0 is n̄).
struct BoxView {
  std::size_t candidates = 0;
  std::size_t words = 0;
  int t = 0;
  /// candidates x words; bit j of row i set iff j > i and profile i
  /// delta-dominates profile j.
  const std::uint64_t* down = nullptr;
  /// Condition-4 indices k (bit k-1) that each candidate satisfies.
  const std::uint64_t* cond4 = nullptr;
  /// (t-1) x words; candidates satisfying condition 4 at each k.
  const std::uint64_t* cond_sets = nullptr;
  std::uint64_t full_mask = 0;
};

/// Accepted antichains are reported through this hook; returning false
/// drops the antichain from the count. A null `visit` counts everything.
struct SearchHooks {
  void* ctx = nullptr;
  bool (*visit)(void* ctx, const int* chosen, int depth) = nullptr;
};

struct ShardTask {
  const BoxView* box = nullptr;
  /// Candidates allowed anywhere in the antichain.
  const std::uint64_t* allowed = nullptr;
  /// Index of the lexicographically largest row.
  int first = 0;
  /// Exact row count, or 0 for any.
  int row_limit = 0;
  /// (max depth + 2) x words of scratch, owned by the caller.
  std::uint64_t* arena = nullptr;
  /// Scratch for the chosen row indices, at least max depth + 1 entries.
  int* chosen = nullptr;
};

std::uint64_t search_shard_scalar(const ShardTask& task, const SearchHooks& hooks);
std::uint64_t search_shard_avx2(const ShardTask& task, const SearchHooks& hooks);
bool search_avx2_compiled();

}  // namespace csg::detail
