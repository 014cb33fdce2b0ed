#include "c5min/symcert.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "c5min/graph.hpp"

namespace c5min {

namespace {

const PolyK kK = PolyK::k();

PolyK poly(std::initializer_list<long> ascending) {
  std::vector<BigRational> c;
  for (long v : ascending) c.emplace_back(v);
  return PolyK(std::move(c));
}

PolyK k_power(int e) { return PolyK::monomial(1, e); }

}  // namespace

RatFnK alpha_fn() { return RatFnK(poly({-192, 360, -240, 60}), k_power(3)); }

RatFnK lambda_fn() {
  PolyK num{BigRational(2, 5), BigRational(-1), BigRational(1), BigRational(-1, 2), BigRational(1, 10)};
  return RatFnK(num, k_power(4));
}

RatFnK p_fn() { return RatFnK(kK - PolyK(1), kK); }

PolyMatrix matrix_A() {
  const PolyK a00 = poly({96, -96, 32});
  const PolyK a02 = poly({0, -16, 4});
  const PolyK a11 = poly({-96, 96, -8, -30, 10});
  const PolyK a12 = poly({96, -80, -4, 35, -10});
  const PolyK a22 = poly({-96, 64, 24, -40, 10});
  return {{a00, PolyK(), a02}, {PolyK(), a11, a12}, {a02, a12, a22}};
}

PolyMatrix matrix_B() {
  const PolyK k = kK;
  return {
      {k - PolyK(1), PolyK(1), k - PolyK(2), PolyK(), k - PolyK(3), PolyK(-1)},
      {PolyK(), PolyK(2), k - PolyK(2), PolyK(), poly({-4, 2}), PolyK(-2)},
      {PolyK(), PolyK(), k - PolyK(1), PolyK(-1), poly({-2, 2}), PolyK(-2)},
  };
}

RatMatrix matrix_M() {
  static const RatMatrix m = [] {
    const PolyMatrix a = matrix_A();
    const PolyMatrix b = matrix_B();
    const RatFnK scale(PolyK(3), PolyK::monomial(2, 4));
    RatMatrix out(6, std::vector<RatFnK>(6));
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        PolyK s;
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t c = 0; c < 3; ++c) s += b[r][i] * a[r][c] * b[c][j];
        out[i][j] = scale * RatFnK(s);
      }
    return out;
  }();
  return m;
}

std::vector<std::vector<BigRational>> matrix_M_at(const BigRational& k) {
  const RatMatrix& m = matrix_M();
  std::vector<std::vector<BigRational>> out(6, std::vector<BigRational>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) out[i][j] = m[i][j](k);
  return out;
}

std::vector<PolyK> leading_minors_A() {
  const PolyMatrix a = matrix_A();
  const PolyK m1 = a[0][0];
  const PolyK m2 = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  const PolyK m3 = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                   a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return {m1, m2, m3};
}

PerKVerdict psd_check_A_at(long k) {
  if (k < 3) throw std::domain_error("psd_check_A: k must be at least 3, got " + std::to_string(k));
  static const std::vector<PolyK> minors = leading_minors_A();
  PerKVerdict v;
  v.k = k;
  v.positive = true;
  for (const PolyK& m : minors) {
    v.minors.push_back(m(BigRational(k)));
    if (sgn(v.minors.back()) <= 0) v.positive = false;
  }
  return v;
}

ShiftVerdict psd_check_A_shift() {
  ShiftVerdict v;
  v.proved = true;
  for (const PolyK& m : leading_minors_A()) {
    PolyK s = m.taylor_shift(3);
    bool ok = sgn(s.coeff(0)) > 0;
    for (const auto& c : s.coeffs()) ok = ok && sgn(c) >= 0;
    v.shifted.push_back(std::move(s));
    v.minor_proved.push_back(ok);
    v.proved = v.proved && ok;
  }
  return v;
}

RangeVerdict psd_check_A_range(long kmax, const ParallelFor& pfor) {
  if (kmax < 3) throw std::domain_error("psd_check_A: kmax must be at least 3");
  const std::size_t count = static_cast<std::size_t>(kmax - 2);
  std::vector<char> ok(count, 0);
  pfor(count, [&](std::size_t i) { ok[i] = psd_check_A_at(static_cast<long>(i) + 3).positive ? 1 : 0; });
  RangeVerdict v;
  v.kmax = kmax;
  v.all_positive = true;
  for (std::size_t i = 0; i < count; ++i)
    if (!ok[i]) {
      v.all_positive = false;
      v.first_failure = static_cast<long>(i) + 3;
      break;
    }
  return v;
}

// ---------------------------------------------------------------- c_F

std::vector<RatFnK> cF_symbolic(const CoeffTable& table, const std::vector<std::int64_t>& copt,
                                const std::vector<BigRational>& pk2) {
  const RatMatrix& m = matrix_M();
  const RatFnK alpha = alpha_fn();
  const RatFnK alpha_p = alpha * p_fn();
  std::vector<RatFnK> out;
  out.reserve(kNumFiveClasses);
  for (int f = 0; f < kNumFiveClasses; ++f) {
    RatFnK cfm;
    for (int i = 0; i < kNumFlags; ++i)
      for (int j = i; j < kNumFlags; ++j) {
        const BigRational& coeff = table.at(i, j, f);
        if (sgn(coeff) == 0) continue;
        const long mult = (i == j) ? 1 : 2;
        cfm += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * RatFnK(BigRational(coeff * mult));
      }
    RatFnK cf = RatFnK(BigRational(copt[static_cast<std::size_t>(f)])) + alpha_p -
                alpha * RatFnK(pk2[static_cast<std::size_t>(f)]) - cfm;
    out.push_back(std::move(cf));
  }
  return out;
}

std::vector<RatFnK> cF_symbolic() {
  static const std::vector<RatFnK> cf = cF_symbolic(product_table(), cF_opt_vector(), pK2_vector());
  return cf;
}

std::vector<BigRational> cFM_at(const CoeffTable& table, const BigRational& k) {
  const auto m = matrix_M_at(k);
  std::vector<BigRational> out(kNumFiveClasses, BigRational(0));
  for (int f = 0; f < kNumFiveClasses; ++f)
    for (int i = 0; i < kNumFlags; ++i)
      for (int j = i; j < kNumFlags; ++j) {
        const BigRational& coeff = table.at(i, j, f);
        if (sgn(coeff) == 0) continue;
        out[static_cast<std::size_t>(f)] += (i == j ? 1 : 2) * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * coeff;
      }
  return out;
}

// ---------------------------------------------------------------- kernel

RatMatrix reference_kernel() {
  const RatFnK k(PolyK::k());
  const RatFnK q = k * k - RatFnK(3) * k + RatFnK(2);  // k^2 - 3k + 2
  const RatFnK half(BigRational(1, 2));
  return {
      {RatFnK(1), RatFnK(0), RatFnK(0), RatFnK(2) * (k - RatFnK(1)), k - RatFnK(1), q},
      {RatFnK(0), RatFnK(1), RatFnK(0), RatFnK(-2), RatFnK(0), RatFnK(1)},
      {RatFnK(0), RatFnK(0), RatFnK(1), k - RatFnK(1), (k - RatFnK(2)) * half, q * half},
  };
}

RatMatrix kernel_rref() {
  RatMatrix b;
  for (const auto& row : matrix_B()) {
    std::vector<RatFnK> r;
    for (const PolyK& e : row) r.emplace_back(e);
    b.push_back(std::move(r));
  }
  if (rref(b).size() != 3) throw CertificateFailure("kernel: B does not have rank 3 over Q(k)");
  const RatMatrix basis = null_space(b);
  for (const auto& z : basis)
    for (const auto& row : b) {
      RatFnK dot;
      for (std::size_t c = 0; c < row.size(); ++c) dot += row[c] * z[c];
      if (!dot.is_zero()) throw CertificateFailure("kernel: basis vector is not annihilated by B");
    }
  return rref(basis);
}

// ---------------------------------------------------------------- verification

CertReport verify_certificate() {
  CertReport rep;
  rep.cf = cF_symbolic();
  const RatFnK target = RatFnK(120) * lambda_fn();
  const PolyK five_k4 = PolyK::monomial(5, 4);
  const std::vector<long> tail{240, -600, 600, -300};  // k^0..k^3 of 5k^4 c_F

  BigRational min_excess;
  bool first = true;
  for (int f = 0; f < kNumFiveClasses; ++f) {
    const RatFnK scaled = RatFnK(five_k4) * rep.cf[static_cast<std::size_t>(f)];
    if (!scaled.is_polynomial() || scaled.num().degree() > 4)
      throw CertificateFailure("c_F for class " + std::to_string(f) + ": 5k^4 c_F = " + scaled.str() +
                               " is not a polynomial of degree <= 4");
    const PolyK& p = scaled.num();
    for (int e = 0; e < 4; ++e)
      if (p.coeff(e) != tail[static_cast<std::size_t>(e)])
        throw CertificateFailure("c_F for class " + std::to_string(f) + ": 5k^4 c_F = " + p.str() +
                                 " differs from m k^4 - 300k^3 + 600k^2 - 600k + 240 below k^4");
    const BigRational lead = p.coeff(4);
    if (lead.get_den() != 1)
      throw CertificateFailure("c_F for class " + std::to_string(f) + ": k^4 coefficient " + lead.get_str() + " is not an integer");
    const long m = lead.get_num().get_si();
    rep.m.push_back(m);

    const RatFnK diff = rep.cf[static_cast<std::size_t>(f)] - target;
    if (!diff.is_constant()) throw CertificateFailure("c_F - 120 lambda is not constant for class " + std::to_string(f));
    const BigRational excess = diff.constant_value();
    if (sgn(excess) < 0)
      throw CertificateFailure("c_F < 120 lambda for class " + std::to_string(f) + " (excess " + excess.get_str() + ")");
    if (excess != ratio(m - 60, 5))
      throw CertificateFailure("excess of class " + std::to_string(f) + " disagrees with (m - 60)/5");
    if (sgn(excess) == 0)
      rep.tight.push_back(f);
    else
      rep.nontight.push_back({f, excess, m});
    if (first || excess < min_excess) min_excess = excess;
    first = false;
  }
  rep.min_cf_equals_120lambda = !first && sgn(min_excess) == 0;
  if (!rep.min_cf_equals_120lambda) throw CertificateFailure("min_F c_F differs from 120 lambda");
  if (rep.tight.size() != 18 || rep.nontight.size() != 16)
    throw CertificateFailure("expected 18 tight and 16 non-tight classes, got " + std::to_string(rep.tight.size()) + " and " +
                             std::to_string(rep.nontight.size()));

  rep.shift = psd_check_A_shift();
  if (!rep.shift.proved) {
    const RangeVerdict range = psd_check_A_range(1000);
    if (!range.all_positive)
      throw CertificateFailure("A(k) is not positive definite at k = " + std::to_string(*range.first_failure));
  }

  rep.kernel_ok = (kernel_rref() == reference_kernel());
  if (!rep.kernel_ok) throw CertificateFailure("null space of B differs from the reference basis");
  return rep;
}

BigRational lower_bound(long k) {
  if (k < 3) throw std::domain_error("lower_bound: k must be at least 3, got " + std::to_string(k));
  const PerKVerdict psd = psd_check_A_at(k);
  if (!psd.positive) throw CertificateFailure("lower_bound: A(" + std::to_string(k) + ") is not positive definite");
  const auto cf = cF_symbolic();
  BigRational best = cf.front()(BigRational(k));
  for (const auto& c : cf) best = std::min(best, c(BigRational(k)));
  return best / 120;
}

std::vector<NontightGraph> nontight_export() {
  const CertReport rep = verify_certificate();
  const auto& classes = enumerate_classes(5);
  std::vector<NontightGraph> out;
  for (const auto& e : rep.nontight) {
    const SmallGraph& g = classes[static_cast<std::size_t>(e.index)];
    out.push_back({g, write_graph6(g), e.excess});
  }
  return out;
}

}  // namespace c5min
