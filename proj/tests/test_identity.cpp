#include <doctest.h>

#include <cmath>
#include <random>

#include "c5min/extremal.hpp"
#include "c5min/flagalg.hpp"
#include "c5min/identity.hpp"
#include "c5min/symcert.hpp"

using namespace c5min;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1u) g.add_edge(u, v);
  return g;
}

// Flag type by canonical comparison against the basis, independent of rooted_flag_index.
YVector y_vector_oracle(const Graph& g, int r) {
  YVector y{};
  const auto& basis = flag_basis();
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (u == r || v == r) continue;
      const std::array<int, 3> verts{r, u, v};
      const auto code = rooted_canonical_code(RootedFlag(g.induced_small(verts), 0));
      int hits = 0;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (rooted_canonical_code(basis[i]) == code) {
          ++y[i];
          ++hits;
        }
      REQUIRE(hits == 1);
    }
  return y;
}

double log2_ratio(const BigRational& a, const BigRational& b) {
  return std::log2(std::abs(a.get_d()) / std::abs(b.get_d()));
}

}  // namespace

TEST_CASE("y vector examples") {
  const Graph k5 = Graph::from_small(SmallGraph::complete(5));
  CHECK(y_vector(k5, 0) == YVector{0, 0, 0, 0, 0, 6});
  const Graph empty(6);
  CHECK(y_vector(empty, 2) == YVector{10, 0, 0, 0, 0, 0});
  const Graph star = Graph::from_small(SmallGraph::star(4));
  CHECK(y_vector(star, 0) == YVector{0, 0, 0, 0, 6, 0});
  CHECK(y_vector(star, 1) == YVector{3, 0, 0, 3, 0, 0});
  CHECK_THROWS_AS(y_vector(Graph(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(y_vector(k5, 5), std::invalid_argument);
}

TEST_CASE("y vector agrees with canonical classification and sums to C(n-1,2)") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(n, rng);
    for (int r = 0; r < n; ++r) {
      const YVector y = y_vector(g, r);
      CHECK(y == y_vector_oracle(g, r));
      std::int64_t total = 0;
      for (auto v : y) total += v;
      CHECK(total == static_cast<std::int64_t>(n - 1) * (n - 2) / 2);
      // Root edges per triple: one in types 3 and 4, two in types 5 and 6.
      const std::int64_t root_deg = g.degree(r);
      CHECK(y[2] + y[3] + 2 * y[4] + 2 * y[5] == root_deg * (n - 2));
    }
  }
}

TEST_CASE("fast quadratic form equals direct enumeration") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const Graph g = random_graph(n, rng);
    const long k = 3 + static_cast<long>(rng() % 4);
    CHECK(qform_injective(g, k) == qform_injective_brute(g, k));
  }
  CHECK(qform_injective(Graph(4), 3) == 0);
  CHECK(bridge_rhs(Graph(4), 3) == 0);
  CHECK_THROWS_AS(qform_injective(Graph(6), 2), std::domain_error);
}

TEST_CASE("on a five-vertex graph the quadratic form is its own coefficient") {
  const auto& classes = enumerate_classes(5);
  for (long k : {3L, 4L, 7L}) {
    const auto cfm = cFM_at(product_table(), BigRational(k));
    for (std::size_t f = 0; f < classes.size(); ++f)
      CHECK(qform_injective(Graph::from_small(classes[f]), k) == cfm[f]);
  }
}

TEST_CASE("bridge identity on every graph of order 6") {
  const auto& classes = enumerate_classes(6);
  REQUIRE(classes.size() == 156);
  for (const auto& c : classes) {
    const Graph g = Graph::from_small(c);
    const IdentityCheck chk = check_identity(g, 3);
    CHECK(chk.equal);
    CHECK(chk.lhs_injective == chk.rhs);
  }
}

TEST_CASE("bridge identity on random graphs of order 8") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(8, rng);
    CHECK(qform_injective(g, 4) == bridge_rhs(g, 4));
  }
}

TEST_CASE("full quadratic form is nonnegative") {
  std::mt19937_64 rng(29);
  for (long k = 3; k <= 20; ++k) {
    const Graph g = random_graph(9, rng);
    CHECK(sgn(qform_full(g, k)) >= 0);
  }
}

TEST_CASE("finite identity residual is of lower order") {
  // Edge density 1/2 differs from p = 2/3, so a wrong-signed alpha term would leave n^5.
  std::vector<BigRational> res;
  for (std::int64_t n : {12, 24, 48}) {
    const Graph g = complete_multipartite({n / 2, n / 2});
    res.push_back(check_identity(g, 3).residual);
  }
  CHECK(log2_ratio(res[2], res[1]) < 4.5);
  std::vector<BigRational> tur;
  for (int n : {15, 30, 60}) tur.push_back(check_identity(turan_graph(3, n), 3).residual);
  CHECK(log2_ratio(tur[2], tur[1]) < 4.5);
}
