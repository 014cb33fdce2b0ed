#include "c5min/identity.hpp"

#include <stdexcept>
#include <string>

#include "c5min/flagalg.hpp"
#include "c5min/symcert.hpp"

namespace c5min {

namespace {

using Matrix6 = std::vector<std::vector<BigRational>>;

void check_k(long k) {
  if (k < 3) throw std::domain_error("k must be at least 3, got " + std::to_string(k));
}

BigRational quad(const Matrix6& m, const YVector& a, const YVector& b) {
  BigRational s = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    if (a[i] == 0) continue;
    BigRational row = 0;
    for (std::size_t j = 0; j < 6; ++j)
      if (b[j] != 0) row += m[i][j] * b[j];
    s += row * a[i];
  }
  return s;
}

}  // namespace

YVector y_vector(const Graph& g, int r) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("y_vector: graph needs at least 3 vertices");
  if (r < 0 || r >= n) throw std::invalid_argument("y_vector: vertex " + std::to_string(r) + " out of range");
  YVector y{};
  for (int u = 0; u < n; ++u) {
    if (u == r) continue;
    for (int v = u + 1; v < n; ++v)
      if (v != r) ++y[static_cast<std::size_t>(rooted_flag_index(g, r, u, v) - 1)];
  }
  return y;
}

BigRational qform_injective(const Graph& g, long k) {
  check_k(k);
  const int n = g.order();
  if (n < 5) return 0;
  const Matrix6 m = matrix_M_at(BigRational(k));
  BigRational total = 0;
  for (int r = 0; r < n; ++r) {
    const YVector y = y_vector(g, r);
    // All ordered pairs of 2-sets, then remove identical pairs and pairs sharing one vertex.
    BigRational s = quad(m, y, y);
    for (std::size_t t = 0; t < 6; ++t) s -= m[t][t] * y[t];
    for (int u = 0; u < n; ++u) {
      if (u == r) continue;
      YVector c{};
      for (int w = 0; w < n; ++w)
        if (w != r && w != u) ++c[static_cast<std::size_t>(rooted_flag_index(g, r, u, w) - 1)];
      s -= quad(m, c, c);
      for (std::size_t t = 0; t < 6; ++t) s += m[t][t] * c[t];
    }
    total += s;
  }
  return total / 30;
}

BigRational qform_injective_brute(const Graph& g, long k) {
  check_k(k);
  const int n = g.order();
  if (n < 5) return 0;
  const Matrix6 m = matrix_M_at(BigRational(k));
  BigRational total = 0;
  for (int r = 0; r < n; ++r)
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (u == r || v == r) continue;
        const auto t1 = static_cast<std::size_t>(rooted_flag_index(g, r, u, v) - 1);
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) {
            if (a == r || b == r || a == u || a == v || b == u || b == v) continue;
            total += m[t1][static_cast<std::size_t>(rooted_flag_index(g, r, a, b) - 1)];
          }
      }
  return total / 30;
}

BigRational qform_full(const Graph& g, long k) {
  check_k(k);
  const Matrix6 m = matrix_M_at(BigRational(k));
  BigRational total = 0;
  for (int r = 0; r < g.order(); ++r) {
    const YVector y = y_vector(g, r);
    total += quad(m, y, y);
  }
  return total * 4 / 120;
}

BigRational bridge_rhs(const Graph& g, long k) {
  check_k(k);
  if (g.order() < 5) return 0;
  const auto cfm = cFM_at(product_table(), BigRational(k));
  const auto counts = induced_counts5(g);
  BigRational s = 0;
  for (std::size_t f = 0; f < counts.size(); ++f)
    if (counts[f] != 0) s += cfm[f] * counts[f];
  return s;
}

IdentityCheck check_identity(const Graph& g, long k) {
  check_k(k);
  IdentityCheck c;
  c.lhs_injective = qform_injective(g, k);
  c.rhs = bridge_rhs(g, k);
  c.equal = c.lhs_injective == c.rhs;

  const BigRational kq(k);
  const BigRational alpha = alpha_fn()(kq);
  const BigRational p = p_fn()(kq);
  const BigInt n = g.order();
  BigInt n3 = n * n * n;
  BigInt n5 = n3 * n * n;
  BigRational lhs = BigRational(BigInt(count_c5(g)));
  lhs += alpha / 120 * (p * n5 - 2 * BigRational(BigInt(g.num_edges())) * n3);
  lhs -= qform_full(g, k);
  BigRational rhs = 0;
  if (g.order() >= 5) {
    const auto cf = cF_symbolic();
    const auto counts = induced_counts5(g);
    for (std::size_t f = 0; f < counts.size(); ++f)
      if (counts[f] != 0) rhs += cf[f](kq) * counts[f];
  }
  c.residual = lhs - rhs;
  return c;
}

}  // namespace c5min
