#include "runfree/tight.hpp"

#include <stdexcept>

#include "runfree/cycles.hpp"

namespace runfree {

Count t_tight(PathCounter& pc, int r, int n, int k, long j) {
  if (r < 3) throw std::invalid_argument("t_tight needs r >= 3");
  if (n < 1) throw std::invalid_argument("t_tight needs n >= 1");
  if (k < 1) throw std::invalid_argument("run bound k must be >= 1");
  // k blue tight edges = k+r-1 consecutive blue vertices = a 2-uniform blue
  // subpath of length k+r-2; both sides have n+r-1 vertices.
  return pc.f_loose(2, r + n - 2, r + k - 2, j);
}

Count tc_tight(PathCounter& pc, int r, int n, int k, long j) {
  if (r < 3) throw std::invalid_argument("tc_tight needs r >= 3");
  if (n < 2 * r) throw std::invalid_argument("tc_tight needs n >= 2r");
  if (k < 1) throw std::invalid_argument("run bound k must be >= 1");
  // Same vertex-line argument on the n-cycle: k blue tight edges are
  // k+r-1 cyclically consecutive blue vertices.
  return c_two_cycle(pc, n, r + k - 2, j);
}

Count tc_tight_as_printed(PathCounter& pc, int r, int n, int k, long j) {
  if (r < 3) throw std::invalid_argument("tc_tight needs r >= 3");
  if (n < 2 * r) throw std::invalid_argument("tc_tight needs n >= 2r");
  return c_two_cycle(pc, r + n - 2, k, j);
}

Count m_tight_oracle_count(int r, int m, int n, int k, long j,
                           const OracleOptions& opts) {
  return oracle_count({Family::MTightPath, r, n, m}, k, j, opts);
}

ConjectureReport check_conjecture(int r, int n, int k,
                                  const OracleOptions& opts) {
  if (r < 3) throw std::invalid_argument("conjecture sweep needs r >= 3");
  ConjectureReport report;
  report.r = r;
  report.n = n;
  report.k = k;

  std::vector<std::vector<Count>> tables(r);  // index by overlap m
  int max_vertices = 0;
  for (int m = 1; m <= r - 1; ++m) {
    StructureSpec spec{Family::MTightPath, r, n, m};
    try {
      tables[m] = oracle_table(spec, k, opts);
      max_vertices = std::max(max_vertices, vertex_count(spec));
    } catch (const OracleBudgetExceeded& e) {
      report.skipped.push_back("m=" + std::to_string(m) + ": " + e.what());
    }
  }
  if (tables[1].empty() || tables[r - 1].empty()) return report;

  auto at = [](const std::vector<Count>& t, long j) {
    return (j >= 0 && j < static_cast<long>(t.size())) ? t[j] : Count(0);
  };
  for (int m = 1; m <= r - 1; ++m) {
    if (tables[m].empty()) continue;
    for (long j = 0; j <= max_vertices; ++j) {
      ConjectureEntry entry;
      entry.m = m;
      entry.j = j;
      entry.tightest = at(tables[r - 1], j);
      entry.value = at(tables[m], j);
      entry.loosest = at(tables[1], j);
      entry.violation =
          entry.tightest > entry.value || entry.value > entry.loosest;
      if (entry.violation) ++report.violations;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace runfree
