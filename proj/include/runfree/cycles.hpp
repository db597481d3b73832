#pragma once

#include "runfree/counting.hpp"
#include "runfree/oracle.hpp"

namespace runfree {

/// Number of positions a distinguished blue edge can take inside a maximal
/// blue run of length l.  RunLength (factor l) is the oracle-confirmed
/// reading; RunLengthPlusOne exists so the verification harness can
/// demonstrate that the alternative is wrong.
enum class BlueRunMultiplicity { RunLength, RunLengthPlusOne };

/// C_k(2,n,j): run-avoiding colorings of the n-vertex cycle graph, n >= 4.
Count c_two_cycle(PathCounter& pc, int n, int k, long j);

/// C_k^nb(r,n,j): loose r-cycle colorings where edge E_n is not fully blue.
/// Requires r >= 3 and n > k+2.
Count c_nb(PathCounter& pc, int r, int n, int k, long j);

/// C_k^b(r,n,j): loose r-cycle colorings where edge E_n is fully blue
/// (zero when k = 1).  Requires r >= 3 and n > k+2.
Count c_b(PathCounter& pc, int r, int n, int k, long j,
          BlueRunMultiplicity mult = BlueRunMultiplicity::RunLength);

/// C_k(r,n,j): run-avoiding colorings of the loose r-cycle with n edges.
/// Instances outside the recurrences' hypotheses (r = 2 with n = 3, or
/// r >= 3 with n <= k+2) are delegated to the oracle; `used_oracle`, when
/// non-null, reports the delegation.
Count c_loose(PathCounter& pc, int r, int n, int k, long j,
              const OracleOptions& opts = {}, bool* used_oracle = nullptr);

}  // namespace runfree
