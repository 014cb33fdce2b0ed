#include <doctest.h>

#include <random>

#include "c5min/polyk.hpp"

using namespace c5min;

namespace {

const PolyK k = PolyK::k();

PolyK random_poly(std::mt19937_64& rng, int max_degree) {
  std::vector<BigRational> c;
  const int d = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
  for (int i = 0; i <= d; ++i) c.push_back(ratio(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1));
  return PolyK(std::move(c));
}

BigRational random_q(std::mt19937_64& rng) { return ratio(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 13) + 1); }

}  // namespace

TEST_CASE("polynomial basics") {
  CHECK(PolyK().is_zero());
  CHECK(PolyK().degree() == PolyK::kZeroDegree);
  CHECK(PolyK(0).is_zero());
  CHECK((k + PolyK(1)) * (k - PolyK(1)) == k * k - PolyK(1));
  CHECK((k * k - PolyK(1)).degree() == 2);
  CHECK((k - k).is_zero());
  CHECK(PolyK({1, 2, 3})(BigRational(2)) == 17);
  CHECK(PolyK({1, 2, 3}).eval(0.5) == doctest::Approx(2.75));
  CHECK(PolyK({BigRational(2, 5), -1, 1}).str() == "k^2 - k + 2/5");
  CHECK((-(k * k) + PolyK(3)).str("t") == "-t^2 + 3");
}

TEST_CASE("taylor shift re-expands around the new origin") {
  // k^2 at k = t + 3 is t^2 + 6t + 9
  CHECK((k * k).taylor_shift(3) == PolyK({9, 6, 1}));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const PolyK p = random_poly(rng, 6);
    const BigRational s = random_q(rng), t = random_q(rng);
    CHECK(p.taylor_shift(s)(t) == p(t + s));
  }
}

TEST_CASE("division and gcd") {
  PolyK q, r;
  PolyK::divmod(k * k * k - PolyK(1), k - PolyK(1), q, r);
  CHECK(q == k * k + k + PolyK(1));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(PolyK::divmod(k, PolyK(), q, r), std::domain_error);
  const PolyK a = (k - PolyK(1)) * (k - PolyK(2)) * PolyK(6);
  const PolyK b = (k - PolyK(1)) * (k + PolyK(3)) * PolyK(4);
  CHECK(PolyK::gcd(a, b) == k - PolyK(1));
  CHECK(PolyK::gcd(PolyK(), PolyK()).is_zero());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyK x = random_poly(rng, 7), y = random_poly(rng, 4);
    if (y.is_zero()) continue;
    PolyK::divmod(x, y, q, r);
    CHECK(q * y + r == x);
    CHECK(r.degree() < y.degree());
    const PolyK g = PolyK::gcd(x * y, y * y);
    PolyK q2, r2;
    PolyK::divmod(x * y, g, q2, r2);
    CHECK(r2.is_zero());
    PolyK::divmod(y * y, g, q2, r2);
    CHECK(r2.is_zero());
  }
}

TEST_CASE("rational functions are kept reduced with monic denominators") {
  const RatFnK f(k * k - PolyK(1), k - PolyK(1));
  CHECK(f.is_polynomial());
  CHECK(f.num() == k + PolyK(1));
  const RatFnK g(k * PolyK(2), k * PolyK(2) + PolyK(2));
  CHECK(g.den() == k + PolyK(1));
  CHECK(g.num() == k);
  CHECK(RatFnK(BigRational(3, 4)).is_constant());
  CHECK(RatFnK(BigRational(3, 4)).constant_value() == BigRational(3, 4));
  CHECK_THROWS_AS(RatFnK(k).constant_value(), std::domain_error);
  CHECK_THROWS_AS(RatFnK(PolyK(1), PolyK()), std::domain_error);
  CHECK_THROWS_AS(RatFnK(PolyK(1), k)(BigRational(0)), std::domain_error);
  CHECK(RatFnK(PolyK(1), k - PolyK(2))(BigRational(4)) == BigRational(1, 2));
}

TEST_CASE("field axioms hold on random rational functions") {
  std::mt19937_64 rng(2024);
  auto rf = [&] {
    PolyK d = random_poly(rng, 3);
    if (d.is_zero()) d = PolyK(1);
    return RatFnK(random_poly(rng, 3), d);
  };
  for (int trial = 0; trial < 60; ++trial) {
    const RatFnK a = rf(), b = rf(), c = rf();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == RatFnK());
    if (!a.is_zero()) CHECK(a / a == RatFnK(1));
    // evaluation is a ring homomorphism away from poles
    const BigRational x = random_q(rng);
    if (sgn(a.den()(x)) != 0 && sgn(b.den()(x)) != 0) {
      CHECK((a * b)(x) == a(x) * b(x));
      CHECK((a - b)(x) == a(x) - b(x));
    }
  }
}

TEST_CASE("row reduction and null space over Q(k)") {
  const RatFnK kk(k);
  RatMatrix m{{RatFnK(1), kk}, {RatFnK(2), kk * RatFnK(2)}};
  const RatMatrix r = rref(m);
  REQUIRE(r.size() == 1);
  CHECK(r[0][0] == RatFnK(1));
  CHECK(r[0][1] == kk);
  const RatMatrix ns = null_space(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == -kk);
  CHECK(ns[0][1] == RatFnK(1));

  // Pivots are normalized to 1 and pivot columns are cleared.
  RatMatrix m2{{kk, RatFnK(1), RatFnK(0)}, {RatFnK(1), RatFnK(0), kk}};
  const RatMatrix r2 = rref(m2);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0][0] == RatFnK(1));
  CHECK(r2[1][0].is_zero());
  CHECK(r2[1][1] == RatFnK(1));
  CHECK(r2[0][1].is_zero());
  for (const auto& z : null_space(m2))
    for (const auto& row : m2) {
      RatFnK dot;
      for (std::size_t c = 0; c < row.size(); ++c) dot += row[c] * z[c];
      CHECK(dot.is_zero());
    }
}
