#include "c5min/extremal.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "c5min/symcert.hpp"

namespace c5min {

namespace {

constexpr std::size_t kEnumerationCap = 12;

BigInt falling(std::int64_t a, int m) {
  BigInt r = 1;
  for (int i = 0; i < m; ++i) r *= a - i;
  return r;
}

void check_sizes(const PartSizes& sizes) {
  for (std::int64_t s : sizes)
    if (s <= 0) throw std::invalid_argument("part sizes must be positive, got " + std::to_string(s));
}

}  // namespace

PartSizes turan_part_sizes(std::int64_t k, std::int64_t n) {
  if (k < 1 || k > n)
    throw std::invalid_argument("turan_graph: need 1 <= k <= n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
  PartSizes sizes(static_cast<std::size_t>(k), n / k);
  for (std::int64_t i = 0; i < n % k; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

Graph turan_graph(int k, int n) { return complete_multipartite(turan_part_sizes(k, n)); }

Graph complete_multipartite(const PartSizes& sizes) {
  if (sizes.empty()) throw std::invalid_argument("complete_multipartite: no parts");
  check_sizes(sizes);
  std::vector<int> part;
  for (std::size_t p = 0; p < sizes.size(); ++p) part.insert(part.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
  Graph g(static_cast<int>(part.size()));
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) g.add_edge(u, v);
  return g;
}

BigInt c5_multipartite_enumerated(const PartSizes& sizes) {
  check_sizes(sizes);
  const std::size_t k = sizes.size();
  if (k > kEnumerationCap) throw std::invalid_argument("c5_multipartite_enumerated: more than 12 parts");
  BigInt total = 0;
  std::array<std::size_t, 5> c{};
  // Odometer over all k^5 part assignments around the cycle.
  for (;;) {
    bool proper = true;
    for (int i = 0; i < 5 && proper; ++i) proper = c[static_cast<std::size_t>(i)] != c[static_cast<std::size_t>((i + 1) % 5)];
    if (proper) {
      BigInt term = 1;
      std::array<int, kEnumerationCap> used{};
      for (std::size_t p : c) term *= sizes[p] - used[p]++;
      total += term;
    }
    std::size_t i = 0;
    while (i < 5 && ++c[i] == k) c[i++] = 0;
    if (i == 5) break;
  }
  return total / 10;
}

BigInt c5_multipartite_grouped(const PartSizes& sizes) {
  check_sizes(sizes);
  // Elementary symmetric polynomials e_0..e_5 of the part sizes.
  std::array<BigInt, 6> e{1, 0, 0, 0, 0, 0};
  for (std::int64_t a : sizes)
    for (int j = 5; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * a;

  BigInt s = e[1];
  BigInt b_sum = 0, b_sq = 0, ab_sum = 0, ab2_sum = 0, four = 0;
  for (std::int64_t a : sizes) {
    const BigInt b = falling(a, 2);
    b_sum += b;
    b_sq += b * b;
    ab_sum += b * a;
    ab2_sum += b * b * a;
    // e_3 of the other parts: e3 - a (e2 - a (e1 - a)).
    const BigInt e3_other = e[3] - a * (e[2] - a * (e[1] - a));
    four += b * e3_other;
  }
  // Ordered (p, q, r) pairwise distinct of b_p b_q a_r.
  const BigInt three = s * (b_sum * b_sum - b_sq) - 2 * (ab_sum * b_sum - ab2_sum);
  const BigInt ordered = 120 * e[5] + 5 * 6 * four + 5 * three;
  return ordered / 10;
}

BigInt c5_multipartite_closed(const PartSizes& sizes) {
  return sizes.size() <= kEnumerationCap ? c5_multipartite_enumerated(sizes) : c5_multipartite_grouped(sizes);
}

TuranDensityReport turan_density_report(int k, std::int64_t n) {
  if (k < 3) throw std::domain_error("turan_density_report: k must be at least 3, got " + std::to_string(k));
  TuranDensityReport r;
  r.k = k;
  r.n = n;
  r.count = c5_multipartite_closed(turan_part_sizes(k, n));
  BigInt n5 = 1;
  for (int i = 0; i < 5; ++i) n5 *= n;
  r.density = ratio(r.count, n5);
  r.lambda = lambda_fn()(BigRational(k));
  r.gap = r.density - r.lambda;
  return r;
}

}  // namespace c5min
