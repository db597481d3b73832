#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "runfree/bigint.hpp"
#include "runfree/hypergraph.hpp"

namespace runfree {

/// Signals that an instance is too large for exhaustive enumeration; the
/// caller should shrink the instance or raise the budget.
class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int vertex_budget = 26;
  unsigned threads = 0;  // 0 = hardware concurrency

  /// Budget overridable via the RUNFREE_ORACLE_BUDGET environment variable.
  static OracleOptions from_env();
};

using ColoringPredicate =
    std::function<bool(const UniformHypergraph&, std::uint64_t)>;

/// Exhaustive count of colorings with exactly j blue vertices and no
/// forbidden run.  Iterates j-subsets or all 2^V colorings, whichever is
/// cheaper, split into independent chunks combined by addition.
Count oracle_count(const StructureSpec& spec, int k, long j,
                   const OracleOptions& opts = {});

/// Counts for every j at once (one enumeration pass); index j in [0, V].
std::vector<Count> oracle_table(const StructureSpec& spec, int k,
                                const OracleOptions& opts = {});

/// Tables for every run bound 1..k_max from a single enumeration pass.
/// Result[k-1][j] is the count for run bound k.
std::vector<std::vector<Count>> oracle_tables_to_k(
    const StructureSpec& spec, int k_max, const OracleOptions& opts = {});

/// As oracle_count, restricted to colorings satisfying the predicate.
Count oracle_count_filtered(const StructureSpec& spec, int k, long j,
                            const ColoringPredicate& pred,
                            const OracleOptions& opts = {});

/// Valid colorings bucketed by the number l of leading fully blue edges
/// (0 <= l <= k-1 for any valid coloring); result[l][j].
std::vector<std::vector<Count>> oracle_prefix_tables(
    const StructureSpec& spec, int k, const OracleOptions& opts = {});

// Predicate builders for the theorem-verification filters.
ColoringPredicate pred_edge_fully_blue(int edge_index);
ColoringPredicate pred_edge_not_fully_blue(int edge_index);
ColoringPredicate pred_blue_prefix_exactly(int l);
ColoringPredicate pred_vertex_red(int v);

}  // namespace runfree
