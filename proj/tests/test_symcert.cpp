#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "c5min/graph.hpp"
#include "c5min/symcert.hpp"

using namespace c5min;

namespace {

using QMatrix = std::vector<std::vector<BigRational>>;

QMatrix eval(const PolyMatrix& m, const BigRational& k) {
  QMatrix out;
  for (const auto& row : m) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(e(k));
  }
  return out;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.size(), std::vector<BigRational>(b[0].size(), BigRational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t t = 0; t < b.size(); ++t) out[i][j] += a[i][t] * b[t][j];
  return out;
}

QMatrix transpose(const QMatrix& a) {
  QMatrix out(a[0].size(), std::vector<BigRational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

// Rank by fraction-exact elimination.
int rank(QMatrix m) {
  int r = 0;
  const std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t p = static_cast<std::size_t>(r);
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || sgn(m[i][c]) == 0) continue;
      const BigRational f = m[i][c] / m[static_cast<std::size_t>(r)][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

BigRational lambda_at(long k) {
  const BigRational q(k);
  return BigRational(1, 10) - 1 / (2 * q) + 1 / (q * q) - 1 / (q * q * q) + BigRational(2, 5) / (q * q * q * q);
}

}  // namespace

TEST_CASE("alpha, lambda and p at small k") {
  CHECK(alpha_fn()(BigRational(3)) == BigRational(116, 9));
  CHECK(lambda_fn()(BigRational(3)) == BigRational(1, 81));
  CHECK(p_fn()(BigRational(4)) == BigRational(3, 4));
  for (long k = 2; k <= 40; ++k) CHECK(lambda_fn()(BigRational(k)) == lambda_at(k));
  // 120 lambda * 5k^4 = 60k^4 - 300k^3 + 600k^2 - 600k + 240
  const RatFnK scaled = RatFnK(120) * lambda_fn() * RatFnK(PolyK::monomial(5, 4));
  CHECK(scaled.is_polynomial());
  CHECK(scaled.num() == PolyK({240, -600, 600, -300, 60}));
}

TEST_CASE("M is the scaled congruence of A by B") {
  for (long k : {3L, 5L, 11L}) {
    const BigRational kq(k);
    const QMatrix a = eval(matrix_A(), kq), b = eval(matrix_B(), kq);
    QMatrix expect = multiply(multiply(transpose(b), a), b);
    const BigRational scale = BigRational(3) / (2 * kq * kq * kq * kq);
    for (auto& row : expect)
      for (auto& e : row) e *= scale;
    CHECK(matrix_M_at(kq) == expect);
  }
}

TEST_CASE("certificate structure") {
  const CertReport rep = verify_certificate();
  CHECK(rep.tight.size() == 18);
  CHECK(rep.nontight.size() == 16);
  CHECK(rep.min_cf_equals_120lambda);
  CHECK(rep.kernel_ok);
  CHECK(rep.shift.proved);
  std::map<long, int> hist;
  for (const auto& e : rep.nontight) {
    ++hist[e.m];
    CHECK(e.excess == ratio(e.m - 60, 5));
    CHECK(sgn(e.excess) > 0);
  }
  CHECK(hist == std::map<long, int>{{61, 2}, {62, 4}, {64, 4}, {65, 1}, {66, 4}, {68, 1}});
  const RatFnK target = RatFnK(120) * lambda_fn();
  for (int f : rep.tight) CHECK(rep.cf[static_cast<std::size_t>(f)] == target);
  // K5, the last class, is tight.
  CHECK(std::find(rep.tight.begin(), rep.tight.end(), kNumFiveClasses - 1) != rep.tight.end());
}

TEST_CASE("published table gives the same c_F values") {
  // Evaluate c_F at integer k from the published integers only, then compare
  // the multiset with the symbolic c_F evaluated at the same k.
  const PaperData paper = load_paper_data(data_dir() / "appendix_a.csv");
  const auto symbolic = cF_symbolic();
  for (long k : {3L, 4L, 7L, 20L}) {
    const BigRational kq(k);
    const auto m = matrix_M_at(kq);
    const BigRational alpha = alpha_fn()(kq), p = p_fn()(kq);
    std::vector<BigRational> from_paper, from_symbolic;
    for (int f = 0; f < kNumFiveClasses; ++f) {
      BigRational cfm = 0;
      for (int r = 0; r < kNumProductRows; ++r) {
        const auto [i, j] = product_row_pair(r);
        cfm += (i == j ? 1 : 2) * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               ratio(paper.table30[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)], 30);
      }
      from_paper.push_back(paper.copt[static_cast<std::size_t>(f)] + alpha * p -
                           alpha * ratio(paper.pk2x10[static_cast<std::size_t>(f)], 10) - cfm);
      from_symbolic.push_back(symbolic[static_cast<std::size_t>(f)](kq));
    }
    std::sort(from_paper.begin(), from_paper.end());
    std::sort(from_symbolic.begin(), from_symbolic.end());
    CHECK(from_paper == from_symbolic);
    CHECK(from_paper.front() == 120 * lambda_at(k));
  }
}

TEST_CASE("lower bound") {
  CHECK(lower_bound(3) == BigRational(1, 81));
  CHECK(lower_bound(4) == BigRational(1, 10) - BigRational(1, 8) + BigRational(1, 16) - BigRational(1, 64) + BigRational(2, 1280));
  for (long k = 3; k <= 30; ++k) CHECK(lower_bound(k) == lambda_at(k));
  CHECK_THROWS_AS(lower_bound(2), std::domain_error);
  // lambda -> 1/10
  CHECK(lambda_fn().eval(1e9) == doctest::Approx(0.1).epsilon(1e-8));
}

TEST_CASE("positivity of A") {
  const ShiftVerdict s = psd_check_A_shift();
  CHECK(s.proved);
  REQUIRE(s.shifted.size() == 3);
  CHECK(s.shifted[0] == PolyK({96, 96, 32}));
  // the shifted polynomials are the minors at k = t + 3
  const auto minors = leading_minors_A();
  for (std::size_t i = 0; i < 3; ++i)
    for (long t = 0; t < 5; ++t) CHECK(s.shifted[i](BigRational(t)) == minors[i](BigRational(t + 3)));
  CHECK(psd_check_A_at(3).positive);
  CHECK_THROWS_AS(psd_check_A_at(2), std::domain_error);
  const RangeVerdict r = psd_check_A_range(300, threaded_for(4));
  CHECK(r.all_positive);
  CHECK(!r.first_failure.has_value());
}

TEST_CASE("M(k) is positive semidefinite on random rational vectors") {
  std::mt19937_64 rng(42);
  for (long k = 3; k <= 100; ++k) {
    const auto m = matrix_M_at(BigRational(k));
    for (int trial = 0; trial < 1000; ++trial) {
      std::array<BigRational, 6> x;
      for (auto& v : x) v = ratio(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
      BigRational s = 0;
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) s += x[i] * m[i][j] * x[j];
      CHECK(sgn(s) >= 0);
    }
  }
}

TEST_CASE("kernel of B") {
  const RatMatrix z = kernel_rref();
  CHECK(z == reference_kernel());
  const PolyMatrix b = matrix_B();
  for (const auto& row : z)
    for (const auto& brow : b) {
      RatFnK dot;
      for (std::size_t c = 0; c < 6; ++c) dot += RatFnK(brow[c]) * row[c];
      CHECK(dot.is_zero());
    }
  std::vector<BigRational> first;
  for (const auto& e : z[0]) first.push_back(e(BigRational(3)));
  CHECK(first == std::vector<BigRational>{1, 0, 0, 4, 2, 2});
  for (long k = 3; k <= 200; ++k) CHECK(rank(eval(matrix_B(), BigRational(k))) == 3);
}

TEST_CASE("non-tight export matches the published list") {
  // The 16 published non-tight graphs, drawn edges only.
  const std::vector<std::vector<std::pair<int, int>>> published{
      {{3, 4}},
      {{2, 4}, {3, 4}},
      {{1, 4}, {2, 4}, {3, 4}},
      {{2, 3}, {2, 4}, {3, 4}},
      {{1, 4}, {2, 3}},
      {{1, 4}, {2, 3}, {3, 4}},
      {{1, 4}, {2, 3}, {2, 4}, {3, 4}},
      {{0, 4}, {1, 4}, {2, 3}},
      {{0, 4}, {1, 4}, {2, 3}, {3, 4}},
      {{1, 3}, {1, 4}, {2, 3}, {2, 4}},
      {{0, 4}, {1, 3}, {2, 3}, {2, 4}},
      {{0, 4}, {1, 3}, {2, 3}, {2, 4}, {3, 4}},
      {{0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}},
      {{0, 4}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 4}, {1, 2}, {1, 3}, {2, 3}, {3, 4}},
      {{0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}},
  };
  std::set<CanonicalCode> expected;
  for (const auto& edges : published) expected.insert(canonical_code(SmallGraph::from_edges(5, edges)));
  REQUIRE(expected.size() == 16);

  const auto list = nontight_export();
  CHECK(list.size() == 16);
  std::set<CanonicalCode> got;
  for (const auto& g : list) {
    got.insert(canonical_code(g.graph));
    CHECK(g.graph.num_edges() >= 1);
    CHECK(g.graph.num_edges() <= 6);
    CHECK(g.graph6 == write_graph6(g.graph));
    CHECK(g.graph6 != "D~{");
    CHECK(sgn(g.excess) > 0);
  }
  CHECK(got == expected);
}

TEST_CASE("complete multipartite graphs are tight") {
  // They occur with positive density in Turan graphs, so the bound forces c_F = 120 lambda.
  const CertReport rep = verify_certificate();
  const std::set<int> tight(rep.tight.begin(), rep.tight.end());
  const std::vector<std::vector<int>> partitions{{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  for (const auto& parts : partitions) {
    SmallGraph g(5);
    std::vector<int> label;
    for (std::size_t p = 0; p < parts.size(); ++p) label.insert(label.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b)
        if (label[static_cast<std::size_t>(a)] != label[static_cast<std::size_t>(b)]) g.add_edge(a, b);
    CHECK(tight.count(class_index(g)) == 1);
  }
}
