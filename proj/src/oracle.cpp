#include "runfree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

#include "runfree/binomial.hpp"

namespace runfree {

namespace {

unsigned thread_count(const OracleOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

UniformHypergraph build_checked(const StructureSpec& spec,
                                const OracleOptions& opts) {
  UniformHypergraph h = build(spec);
  if (h.vertex_count > 62)
    throw OracleBudgetExceeded("instance exceeds the 62-vertex bitmask limit");
  if (h.vertex_count > opts.vertex_budget)
    throw OracleBudgetExceeded(
        "instance has " + std::to_string(h.vertex_count) +
        " vertices, oracle budget is " + std::to_string(opts.vertex_budget));
  return h;
}

// Enumerates all 2^V colorings split into contiguous chunks, one histogram
// per thread, merged by addition.  visit(local, mask) buckets one coloring.
template <typename Table, typename Visit>
Table enumerate_all(const UniformHypergraph& h, const OracleOptions& opts,
                    const Table& zero, Visit visit) {
  const std::uint64_t total = std::uint64_t{1} << h.vertex_count;
  const unsigned threads =
      std::min<std::uint64_t>(thread_count(opts), std::max<std::uint64_t>(total >> 16, 1));
  std::vector<Table> partial(threads, zero);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      const std::uint64_t lo = t * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      for (std::uint64_t mask = lo; mask < hi; ++mask) visit(partial[t], mask);
    });
  }
  for (auto& w : workers) w.join();
  Table merged = zero;
  for (const auto& p : partial)
    for (std::size_t i = 0; i < merged.size(); ++i) merged[i] += p[i];
  return merged;
}

// Next bitmask with the same popcount (Gosper's hack).
std::uint64_t next_subset(std::uint64_t v) {
  std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

bool prefer_subsets(int vertices, long j) {
  if (j < 0 || j > vertices) return true;  // trivially empty
  Count subsets = binom(vertices, j);
  Count all = Count(1) << vertices;
  return subsets * 8 < all;
}

Count count_subsets(const UniformHypergraph& h, int k, long j,
                    const ColoringPredicate* pred) {
  if (j < 0 || j > h.vertex_count) return 0;
  std::uint64_t total = 0;
  const std::uint64_t limit = std::uint64_t{1} << h.vertex_count;
  std::uint64_t mask = j == 0 ? 0 : (std::uint64_t{1} << j) - 1;
  while (true) {
    if (!has_forbidden_run(h, mask, k) && (!pred || (*pred)(h, mask))) ++total;
    if (j == 0) break;
    mask = next_subset(mask);
    if (mask >= limit) break;
  }
  return Count(static_cast<unsigned long>(total));
}

}  // namespace

OracleOptions OracleOptions::from_env() {
  OracleOptions opts;
  if (const char* env = std::getenv("RUNFREE_ORACLE_BUDGET")) {
    int budget = std::atoi(env);
    if (budget > 0) opts.vertex_budget = std::min(budget, 62);
  }
  return opts;
}

std::vector<std::vector<Count>> oracle_tables_to_k(const StructureSpec& spec,
                                                   int k_max,
                                                   const OracleOptions& opts) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  UniformHypergraph h = build_checked(spec, opts);
  const int v = h.vertex_count;
  const int cap = std::min<int>(k_max, static_cast<int>(h.edges.size()) + 1);
  // hist[min(maxrun, cap)][popcount]
  using Table = std::vector<std::uint64_t>;
  Table zero((cap + 1) * (v + 1), 0);
  Table hist = enumerate_all(h, opts, zero, [&](Table& local, std::uint64_t mask) {
    int run = std::min(max_blue_run(h, mask), cap);
    local[run * (v + 1) + std::popcount(mask)] += 1;
  });
  std::vector<std::vector<Count>> out(k_max, std::vector<Count>(v + 1, 0));
  for (int k = 1; k <= k_max; ++k)
    for (int j = 0; j <= v; ++j) {
      std::uint64_t sum = 0;
      for (int run = 0; run < std::min(k, cap + 1); ++run)
        sum += hist[run * (v + 1) + j];
      out[k - 1][j] = Count(static_cast<unsigned long>(sum));
    }
  return out;
}

std::vector<Count> oracle_table(const StructureSpec& spec, int k,
                                const OracleOptions& opts) {
  return oracle_tables_to_k(spec, k, opts).back();
}

Count oracle_count(const StructureSpec& spec, int k, long j,
                   const OracleOptions& opts) {
  if (k < 1) throw std::invalid_argument("run bound k must be >= 1");
  UniformHypergraph h = build_checked(spec, opts);
  if (j < 0 || j > h.vertex_count) return 0;
  if (prefer_subsets(h.vertex_count, j)) return count_subsets(h, k, j, nullptr);
  return oracle_table(spec, k, opts)[j];
}

Count oracle_count_filtered(const StructureSpec& spec, int k, long j,
                            const ColoringPredicate& pred,
                            const OracleOptions& opts) {
  if (k < 1) throw std::invalid_argument("run bound k must be >= 1");
  UniformHypergraph h = build_checked(spec, opts);
  if (j < 0 || j > h.vertex_count) return 0;
  return count_subsets(h, k, j, &pred);
}

std::vector<std::vector<Count>> oracle_prefix_tables(const StructureSpec& spec,
                                                     int k,
                                                     const OracleOptions& opts) {
  if (k < 1) throw std::invalid_argument("run bound k must be >= 1");
  UniformHypergraph h = build_checked(spec, opts);
  const int v = h.vertex_count;
  const int n = static_cast<int>(h.edges.size());
  using Table = std::vector<std::uint64_t>;
  Table zero(k * (v + 1), 0);
  Table hist = enumerate_all(h, opts, zero, [&](Table& local, std::uint64_t mask) {
    if (has_forbidden_run(h, mask, k)) return;
    int l = 0;
    while (l < n && h.edge_fully_blue(l, mask)) ++l;
    // a valid coloring has l <= k-1
    local[l * (v + 1) + std::popcount(mask)] += 1;
  });
  std::vector<std::vector<Count>> out(k, std::vector<Count>(v + 1, 0));
  for (int l = 0; l < k; ++l)
    for (int j = 0; j <= v; ++j)
      out[l][j] = Count(static_cast<unsigned long>(hist[l * (v + 1) + j]));
  return out;
}

ColoringPredicate pred_edge_fully_blue(int edge_index) {
  return [edge_index](const UniformHypergraph& h, std::uint64_t mask) {
    return h.edge_fully_blue(edge_index, mask);
  };
}

ColoringPredicate pred_edge_not_fully_blue(int edge_index) {
  return [edge_index](const UniformHypergraph& h, std::uint64_t mask) {
    return !h.edge_fully_blue(edge_index, mask);
  };
}

ColoringPredicate pred_blue_prefix_exactly(int l) {
  return [l](const UniformHypergraph& h, std::uint64_t mask) {
    const int n = static_cast<int>(h.edges.size());
    for (int e = 0; e < l; ++e)
      if (!h.edge_fully_blue(e, mask)) return false;
    if (l < n && h.edge_fully_blue(l, mask)) return false;
    return true;
  };
}

ColoringPredicate pred_vertex_red(int v) {
  return [v](const UniformHypergraph&, std::uint64_t mask) {
    return (mask & (std::uint64_t{1} << v)) == 0;
  };
}

}  // namespace runfree
