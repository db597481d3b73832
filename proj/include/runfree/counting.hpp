#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "runfree/bigint.hpp"

namespace runfree {

/// Memoized counts of colorings of loose r-paths with exactly j blue
/// vertices avoiding k consecutive fully blue edges.
///
/// All operations are pure functions of their arguments plus the cache;
/// lookups and insertions are safe from multiple threads (writers race only
/// on identical values).
class PathCounter {
 public:
  /// F_k(r,n,j): run-avoiding colorings of the loose r-path with n edges.
  ///
  /// Conventions: j < 0 or j above the vertex count give 0; the zero-edge
  /// path is a single vertex (count 1 for j in {0,1}); j = 0 gives 1.
  /// Throws std::invalid_argument for r < 2, k < 1 or n < 0.
  Count f_loose(int r, int n, int k, long j);

  /// F_k^*(r,m,i): as f_loose on an m-edge path, with one fixed degree-1
  /// vertex of the first edge forced red.
  Count f_star(int r, int m, int k, long i);

  /// F_k^l(r,n,j): colorings where edges 1..l are fully blue and edge l+1
  /// is not.  Requires r >= 3 and 1 <= l <= k-1.
  Count f_prefix(int r, int n, int k, int l, long j);

  /// F_k^0(r,n,j): colorings whose first edge is not fully blue.
  /// Requires r >= 3, n >= 1.
  Count f_prefix_zero(int r, int n, int k, long j);

  /// Closed-form cases for n >= k; empty when the tuple is permissible and
  /// a recurrence is needed.
  static std::optional<Count> base_case(int r, int n, int k, long j);

  /// n(r-1)+1 for n >= 1, or 1 for the zero-edge (single vertex) path.
  static int loose_path_vertex_count(int r, int n);

  std::size_t cache_size() const;
  void clear_cache();

 private:
  // Internal evaluation: n < 0 is the empty structure (count [j == 0]),
  // needed by the cycle recurrences which peel past the last edge.
  Count eval(int r, int n, int k, long j);
  Count recurrence_r2(int n, int k, long j);
  Count recurrence_general(int r, int n, int k, long j);

  std::optional<Count> cache_find(std::uint64_t key) const;
  void cache_store(std::uint64_t key, const Count& value);

  std::unordered_map<std::uint64_t, Count> cache_;
  mutable std::shared_mutex mutex_;

  friend Count f_loose_ext(PathCounter&, int r, int n, int k, long j);
};

/// f_loose extended with the empty-structure convention for n < 0
/// (value [j == 0]).  Used by the cycle recurrences.
Count f_loose_ext(PathCounter& pc, int r, int n, int k, long j);

}  // namespace runfree
