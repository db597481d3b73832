#include "runfree/cycles.hpp"

#include <stdexcept>

#include "runfree/binomial.hpp"

namespace runfree {

namespace {

long cycle_vertices(int r, int n) { return static_cast<long>(n) * (r - 1); }

}  // namespace

Count c_two_cycle(PathCounter& pc, int n, int k, long j) {
  if (n < 4) throw std::invalid_argument("c_two_cycle needs n >= 4");
  if (k < 1) throw std::invalid_argument("run bound k must be >= 1");
  if (j < 0 || j > n) return 0;
  // V_n red: cut to a path.  V_n on a maximal blue vertex-run of l+1
  // vertices: the run plus its two red neighbours leave an interior path of
  // n-l-4 edges, and V_n sits in any of l+1 positions of the run.
  Count total = f_loose_ext(pc, 2, n - 2, k, j);
  for (int l = 0; l <= k - 1; ++l)
    total += Count(l + 1) * f_loose_ext(pc, 2, n - l - 4, k, j - l - 1);
  return total;
}

Count c_nb(PathCounter& pc, int r, int n, int k, long j) {
  if (r < 3) throw std::invalid_argument("c_nb needs r >= 3");
  if (n <= k + 2) throw std::invalid_argument("c_nb needs n > k+2");
  if (j < 0 || j > cycle_vertices(r, n)) return 0;

  Count total = 0;
  // E_n keeps a red degree-1 vertex: cut it out, the rest is a path.
  for (int i = 0; i <= r - 3; ++i)
    total += binom(r - 2, i) * f_loose_ext(pc, r, n - 1, k, j - i);
  // All r-2 degree-1 vertices of E_n blue, both degree-2 vertices red:
  // the neighbours E_1, E_{n-1} cannot be blue, peel their degree-1 sets.
  for (int i = 0; i <= 2 * r - 4; ++i)
    total += binom(2 * r - 4, i) * f_loose_ext(pc, r, n - 3, k, j - (r - 2) - i);
  // Exactly one degree-2 vertex of E_n blue.  The two orientations are
  // symmetric, hence the factor 2 on every sub-case.
  Count oriented = 0;
  for (int a = 0; a <= r - 2; ++a) {
    const Count pick_a = binom(r - 2, a);
    // blue side neighbour E_1 fully blue, heading a run of length l
    for (int l = 1; l <= k - 1; ++l)
      oriented += pick_a * pc.f_prefix(r, n - 2, k, l, j - (r - 2) - a);
    // E_1 not blue with a red degree-1 vertex
    for (int i = 0; i <= r - 3; ++i)
      oriented += pick_a * binom(r - 2, i) *
                  f_loose_ext(pc, r, n - 3, k, j - (r - 2) - 1 - (i + a));
  }
  // E_1's degree-1 vertices all blue force the E_1/E_2 vertex red.
  for (int i = 0; i <= 2 * r - 4; ++i)
    oriented += binom(2 * r - 4, i) *
                f_loose_ext(pc, r, n - 4, k, j - 2 * (r - 2) - 1 - i);
  return total + 2 * oriented;
}

Count c_b(PathCounter& pc, int r, int n, int k, long j,
          BlueRunMultiplicity mult) {
  if (r < 3) throw std::invalid_argument("c_b needs r >= 3");
  if (n <= k + 2) throw std::invalid_argument("c_b needs n > k+2");
  if (k == 1) return 0;  // a fully blue edge is itself a forbidden run
  if (j < 0 || j > cycle_vertices(r, n)) return 0;

  Count total = 0;
  for (int l = 1; l <= k - 1; ++l) {
    const long used = static_cast<long>(l) * (r - 1) + 1;  // blue run vertices
    // Boundary edges of the maximal run are not blue; split on how many of
    // their degree-1 vertices are blue (all r-2 forces the outer degree-2
    // vertex red and peels one edge further).
    Count cases = 0;
    for (int a = 0; a <= r - 3; ++a)
      for (int b = 0; b <= r - 3; ++b)
        cases += binom(r - 2, a) * binom(r - 2, b) *
                 f_loose_ext(pc, r, n - l - 2, k, j - used - a - b);
    Count one_full = 0;
    for (int a = 0; a <= r - 3; ++a)
      for (int b = 0; b <= r - 2; ++b)
        one_full += binom(r - 2, a) * binom(r - 2, b) *
                    f_loose_ext(pc, r, n - l - 3, k, j - used - a - (r - 2) - b);
    cases += 2 * one_full;
    for (int i = 0; i <= 2 * r - 4; ++i)
      cases += binom(2 * r - 4, i) *
               f_loose_ext(pc, r, n - l - 4, k, j - used - 2 * (r - 2) - i);
    const int positions =
        mult == BlueRunMultiplicity::RunLength ? l : l + 1;
    total += Count(positions) * cases;
  }
  return total;
}

Count c_loose(PathCounter& pc, int r, int n, int k, long j,
              const OracleOptions& opts, bool* used_oracle) {
  if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
  if (n < 3) throw std::invalid_argument("loose cycle needs n >= 3");
  if (k < 1) throw std::invalid_argument("run bound k must be >= 1");
  if (used_oracle) *used_oracle = false;
  if (j < 0 || j > cycle_vertices(r, n)) return 0;
  if (j == 0) return 1;
  if (r == 2) {
    if (n >= 4) return c_two_cycle(pc, n, k, j);
  } else if (n > k + 2) {
    return c_nb(pc, r, n, k, j) + c_b(pc, r, n, k, j);
  }
  // Outside the recurrences' hypotheses: delegate to the oracle.
  if (used_oracle) *used_oracle = true;
  return oracle_count({Family::LooseCycle, r, n}, k, j, opts);
}

}  // namespace runfree
