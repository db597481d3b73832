#include "runfree/hypergraph.hpp"

#include <numeric>

namespace runfree {

namespace {

std::uint64_t mask_of(const std::vector<int>& edge) {
  std::uint64_t m = 0;
  for (int v : edge) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace

UniformHypergraph build(const StructureSpec& spec) {
  validate(spec);
  UniformHypergraph h;
  h.spec = spec;
  h.vertex_count = vertex_count(spec);
  const int r = spec.r;
  const int n = spec.n;

  switch (spec.family) {
    case Family::LoosePath: {
      // edge i: vertices i(r-1) .. i(r-1)+r-1, consecutive edges share one
      for (int i = 0; i < n; ++i) {
        std::vector<int> e(r);
        std::iota(e.begin(), e.end(), i * (r - 1));
        h.edges.push_back(std::move(e));
      }
      break;
    }
    case Family::LooseCycle: {
      h.cyclic = true;
      const int v = h.vertex_count;
      for (int i = 0; i < n; ++i) {
        std::vector<int> e(r);
        for (int t = 0; t < r; ++t) e[t] = (i * (r - 1) + t) % v;
        h.edges.push_back(std::move(e));
      }
      break;
    }
    case Family::MTightPath:
    case Family::TightPath: {
      const int m = spec.family == Family::TightPath ? r - 1 : spec.m;
      const int shift = r - m;  // overlap m vertices
      for (int i = 0; i < n; ++i) {
        std::vector<int> e(r);
        std::iota(e.begin(), e.end(), i * shift);
        h.edges.push_back(std::move(e));
      }
      break;
    }
    case Family::TightCycle: {
      h.cyclic = true;
      for (int i = 0; i < n; ++i) {
        std::vector<int> e(r);
        for (int t = 0; t < r; ++t) e[t] = (i + t) % n;
        h.edges.push_back(std::move(e));
      }
      break;
    }
  }

  h.edge_masks.reserve(h.edges.size());
  for (const auto& e : h.edges) h.edge_masks.push_back(mask_of(e));
  return h;
}

int max_blue_run(const UniformHypergraph& h, std::uint64_t blue) {
  const int n = static_cast<int>(h.edges.size());
  if (n == 0) return 0;
  if (!h.cyclic) {
    int best = 0, run = 0;
    for (int e = 0; e < n; ++e) {
      run = h.edge_fully_blue(e, blue) ? run + 1 : 0;
      if (run > best) best = run;
    }
    return best;
  }
  // Cyclic: scan two laps, capping the run at n (all-blue wraps forever).
  int best = 0, run = 0;
  for (int t = 0; t < 2 * n; ++t) {
    if (h.edge_fully_blue(t % n, blue)) {
      if (++run >= n) return n;
      if (run > best) best = run;
    } else {
      run = 0;
    }
  }
  return best;
}

bool has_forbidden_run(const UniformHypergraph& h, std::uint64_t blue, int k) {
  // Runs are over distinct edges, so they cap at n even on a cycle.
  if (k > static_cast<int>(h.edges.size())) return false;
  return max_blue_run(h, blue) >= k;
}

}  // namespace runfree
