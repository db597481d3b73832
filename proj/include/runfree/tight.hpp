#pragma once

#include <string>
#include <vector>

#include "runfree/counting.hpp"
#include "runfree/oracle.hpp"

namespace runfree {

/// T_k(r,n,j): colorings of the (r-1)-tight r-path with n edges, by
/// reduction to a 2-uniform path: a blue tight subpath of length k occupies
/// k+r-1 consecutive vertices, i.e. a 2-uniform blue subpath of length
/// k+r-2 on the same n+r-1 vertices.
Count t_tight(PathCounter& pc, int r, int n, int k, long j);

/// TC_k(r,n,j): colorings of the (r-1)-tight r-cycle on n vertices
/// (n >= 2r), computed as C_{r+k-2}(2,n,j) so both sides live on n
/// vertices.  The identity as printed elsewhere equates different-sized
/// vertex sets; see tc_tight_as_printed.
Count tc_tight(PathCounter& pc, int r, int n, int k, long j);

/// The printed identity TC_k(r,n,j) = C_k(2,r+n-2,j), kept evaluable so the
/// verification harness can document its failure.
Count tc_tight_as_printed(PathCounter& pc, int r, int n, int k, long j);

/// Exhaustive count for an m-tight r-path of general overlap m in [1,r-1]
/// (no recurrence exists for 1 < m < r-1).
Count m_tight_oracle_count(int r, int m, int n, int k, long j,
                           const OracleOptions& opts = {});

struct ConjectureEntry {
  int m = 0;
  long j = 0;
  Count tightest;  // m = r-1 chain endpoint
  Count value;     // overlap m
  Count loosest;   // m = 1 chain endpoint
  bool violation = false;
};

/// Oracle sweep of the chain F_k(r-1;r,n,j) <= F_k(m;r,n,j) <= F_k(1;r,n,j)
/// over all overlaps m and all j.  A violation is a finding, not an error.
struct ConjectureReport {
  int r = 0, n = 0, k = 0;
  std::vector<ConjectureEntry> entries;
  std::vector<std::string> skipped;  // budget-exceeded notes
  int violations = 0;
};

ConjectureReport check_conjecture(int r, int n, int k,
                                  const OracleOptions& opts = {});

}  // namespace runfree
