#ifndef C5MIN_POLYK_HPP
#define C5MIN_POLYK_HPP

#include <gmpxx.h>

#include <climits>
#include <initializer_list>
#include <string>
#include <vector>

namespace c5min {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// n/d in lowest terms.
inline BigRational ratio(const BigInt& n, const BigInt& d) {
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

/// Dense univariate polynomial over Q in the indeterminate k.
/// Coefficients are stored in ascending powers with no trailing zeros,
/// so the zero polynomial has an empty coefficient list.
class PolyK {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  PolyK() = default;
  PolyK(long c);  // NOLINT: constants promote implicitly
  PolyK(const BigRational& c);  // NOLINT
  PolyK(std::initializer_list<BigRational> ascending);
  explicit PolyK(std::vector<BigRational> ascending);

  /// The monomial k.
  static PolyK k();
  static PolyK monomial(const BigRational& c, int power);

  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of k^i; zero beyond the degree.
  BigRational coeff(int i) const;
  BigRational leading() const;
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  BigRational operator()(const BigRational& at) const;
  double eval(double at) const;

  /// Re-expands p(k) as a polynomial in t with k = t + shift.
  PolyK taylor_shift(const BigRational& shift) const;

  PolyK& operator+=(const PolyK& o);
  PolyK& operator-=(const PolyK& o);
  PolyK& operator*=(const PolyK& o);
  PolyK operator-() const;

  friend PolyK operator+(PolyK a, const PolyK& b) { return a += b; }
  friend PolyK operator-(PolyK a, const PolyK& b) { return a -= b; }
  friend PolyK operator*(PolyK a, const PolyK& b) { return a *= b; }
  friend bool operator==(const PolyK& a, const PolyK& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws std::domain_error for a zero divisor.
  static void divmod(const PolyK& a, const PolyK& b, PolyK& quot, PolyK& rem);
  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static PolyK gcd(PolyK a, PolyK b);

  PolyK monic() const;

  /// Human-readable form such as "60*k^4 - 300*k^3 + 240".
  std::string str(const std::string& var = "k") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Reduced quotient of two PolyK values: gcd(num, den) = 1 and den monic.
class RatFnK {
 public:
  RatFnK() : num_(), den_(1) {}
  RatFnK(long c) : num_(c), den_(1) {}  // NOLINT
  RatFnK(const BigRational& c) : num_(c), den_(1) {}  // NOLINT
  RatFnK(const PolyK& p) : num_(p), den_(1) {}  // NOLINT
  RatFnK(PolyK num, PolyK den);

  const PolyK& num() const { return num_; }
  const PolyK& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; throws std::domain_error otherwise.
  BigRational constant_value() const;

  /// Throws std::domain_error when the denominator vanishes at `at`.
  BigRational operator()(const BigRational& at) const;
  double eval(double at) const;

  RatFnK& operator+=(const RatFnK& o);
  RatFnK& operator-=(const RatFnK& o);
  RatFnK& operator*=(const RatFnK& o);
  RatFnK& operator/=(const RatFnK& o);
  RatFnK operator-() const;

  friend RatFnK operator+(RatFnK a, const RatFnK& b) { return a += b; }
  friend RatFnK operator-(RatFnK a, const RatFnK& b) { return a -= b; }
  friend RatFnK operator*(RatFnK a, const RatFnK& b) { return a *= b; }
  friend RatFnK operator/(RatFnK a, const RatFnK& b) { return a /= b; }
  friend bool operator==(const RatFnK& a, const RatFnK& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(const std::string& var = "k") const;

 private:
  void normalize();
  PolyK num_;
  PolyK den_;
};

using RatMatrix = std::vector<std::vector<RatFnK>>;

/// Reduced row echelon form over Q(k). The pivot is the first nonzero
/// entry of the column scanning down; zero rows are dropped.
RatMatrix rref(RatMatrix m);

/// Basis of {z : m z = 0} read off the RREF of m, one vector per free column.
RatMatrix null_space(const RatMatrix& m);

std::string to_string(const BigRational& q);

}  // namespace c5min

#endif  // C5MIN_POLYK_HPP
