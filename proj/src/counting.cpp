#include "runfree/counting.hpp"

#include <mutex>
#include <stdexcept>

#include "runfree/binomial.hpp"

namespace runfree {

namespace {

// Cached entries always have 0 < r,n,k < 2^16 and 0 < j < 2^16.
std::uint64_t pack_key(int r, int n, int k, long j) {
  return (static_cast<std::uint64_t>(r) << 48) |
         (static_cast<std::uint64_t>(n) << 32) |
         (static_cast<std::uint64_t>(k) << 16) | static_cast<std::uint64_t>(j);
}

long ceil_div(long a, long b) { return (a + b - 1) / b; }

}  // namespace

int PathCounter::loose_path_vertex_count(int r, int n) {
  if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
  if (n < 0) throw std::invalid_argument("edge count n must be >= 0");
  return n == 0 ? 1 : n * (r - 1) + 1;
}

std::optional<Count> PathCounter::base_case(int r, int n, int k, long j) {
  // Stated for n >= k only.
  if (n < k) return std::nullopt;
  const long vertices = n * (r - 1) + 1;
  if (j < static_cast<long>(k) * (r - 1) + 1) return binom(vertices, j);
  if (n >= k + 1 && j > vertices - ceil_div(n - (k - 1), k + 1)) return Count(0);
  if (n == k && j >= vertices) return Count(0);
  return std::nullopt;
}

Count PathCounter::f_loose(int r, int n, int k, long j) {
  if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
  if (k < 1) throw std::invalid_argument("run bound k must be >= 1");
  if (n < 0) throw std::invalid_argument("edge count n must be >= 0");
  return eval(r, n, k, j);
}

Count f_loose_ext(PathCounter& pc, int r, int n, int k, long j) {
  return pc.eval(r, n, k, j);
}

Count PathCounter::eval(int r, int n, int k, long j) {
  if (j < 0) return 0;
  if (n < 0) return j == 0 ? 1 : 0;  // empty structure
  if (n == 0) return (j == 0 || j == 1) ? 1 : 0;  // single vertex
  if (j == 0) return 1;
  const long vertices = n * (r - 1) + 1;
  if (j > vertices) return 0;
  if (n < k) return binom(vertices, j);  // no run of length k fits
  if (auto base = base_case(r, n, k, j)) return *base;

  const std::uint64_t key = pack_key(r, n, k, j);
  if (auto hit = cache_find(key)) return *hit;

  Count value = r == 2 ? recurrence_r2(n, k, j) : recurrence_general(r, n, k, j);
  cache_store(key, value);
  return value;
}

// Peel by the first non-blue edge of the 2-path: first vertex blue forces
// the second red, a blue prefix of i edges forces vertex i+2 red.
Count PathCounter::recurrence_r2(int n, int k, long j) {
  Count total = eval(2, n - 2, k, j - 1) + eval(2, n - 1, k, j);
  for (int i = 1; i <= k - 1; ++i)
    total += eval(2, n - i - 2, k, j - i - 1);
  return total;
}

// F_k = F_k^0 + sum_{l=1}^{k-1} F_k^l; with k = 1 this is exactly the
// single-edge-avoidance recurrence, so one dispatch covers r >= 3.
Count PathCounter::recurrence_general(int r, int n, int k, long j) {
  Count total = f_prefix_zero(r, n, k, j);
  for (int l = 1; l <= k - 1; ++l)
    total += f_prefix(r, n, k, l, j);
  return total;
}

Count PathCounter::f_prefix_zero(int r, int n, int k, long j) {
  if (r < 3) throw std::invalid_argument("f_prefix_zero needs r >= 3");
  if (n < 1) throw std::invalid_argument("f_prefix_zero needs n >= 1");
  if (n == 1) {
    // Single edge, only the all-blue coloring is excluded.
    Count c = binom(r, j);
    if (j == r) c -= 1;
    return c;
  }
  // i blue degree-1 vertices in E_1 (i < r-1 keeps E_1 non-blue), or all
  // r-1 blue which forces the shared vertex red and peels into E_2.
  Count total = 0;
  for (int i = 0; i <= r - 2; ++i)
    total += binom(r - 1, i) * eval(r, n - 1, k, j - i);
  for (int i = 0; i <= r - 2; ++i)
    total += binom(r - 2, i) * eval(r, n - 2, k, j - (r - 1) - i);
  return total;
}

Count PathCounter::f_prefix(int r, int n, int k, int l, long j) {
  if (r < 3) throw std::invalid_argument("f_prefix needs r >= 3");
  if (l < 1 || l > k - 1)
    throw std::invalid_argument("f_prefix needs 1 <= l <= k-1");
  if (n < l) return 0;
  const long prefix_blue = static_cast<long>(l) * (r - 1) + 1;
  if (n == l)  // whole path blue; fine since l <= k-1
    return j == prefix_blue ? 1 : 0;
  if (n == l + 1) {
    // E_{l+1} is the last edge: r-1 free vertices, not all blue.
    const long t = j - prefix_blue;
    if (t == r - 1) return 0;
    return binom(r - 1, t);
  }
  // E_{l+1} not blue: either fewer than r-2 of its degree-1 vertices are
  // blue, or all r-2 are and the vertex shared with E_{l+2} is red.
  Count total = 0;
  for (int i = 0; i <= r - 3; ++i)
    total += binom(r - 2, i) * eval(r, n - (l + 1), k, j - prefix_blue - i);
  for (int i = 0; i <= r - 2; ++i)
    total += binom(r - 2, i) *
             eval(r, n - (l + 2), k, j - static_cast<long>(l + 1) * (r - 1) - i);
  return total;
}

Count PathCounter::f_star(int r, int m, int k, long i) {
  if (r < 2) throw std::invalid_argument("f_star needs r >= 2");
  if (m < 1) throw std::invalid_argument("f_star needs m >= 1");
  if (k < 1) throw std::invalid_argument("f_star needs k >= 1");
  Count total = 0;
  for (int b = 0; b <= r - 2; ++b)
    total += binom(r - 2, b) * eval(r, m - 1, k, i - b);
  return total;
}

std::optional<Count> PathCounter::cache_find(std::uint64_t key) const {
  std::shared_lock lock(mutex_);
  auto it = cache_.find(key);
  if (it == cache_.end()) return std::nullopt;
  return it->second;
}

void PathCounter::cache_store(std::uint64_t key, const Count& value) {
  std::unique_lock lock(mutex_);
  cache_.insert_or_assign(key, value);  // racing writers computed the same value
}

std::size_t PathCounter::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

void PathCounter::clear_cache() {
  std::unique_lock lock(mutex_);
  cache_.clear();
}

}  // namespace runfree
