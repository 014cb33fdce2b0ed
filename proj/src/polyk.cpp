#include "c5min/polyk.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace c5min {

std::string to_string(const BigRational& q) { return q.get_str(); }

// ---------------------------------------------------------------- PolyK

PolyK::PolyK(long c) : coeffs_{BigRational(c)} { trim(); }

PolyK::PolyK(const BigRational& c) : coeffs_{c} { trim(); }

PolyK::PolyK(std::initializer_list<BigRational> ascending) : coeffs_(ascending) { trim(); }

PolyK::PolyK(std::vector<BigRational> ascending) : coeffs_(std::move(ascending)) { trim(); }

PolyK PolyK::k() { return PolyK{BigRational(0), BigRational(1)}; }

PolyK PolyK::monomial(const BigRational& c, int power) {
  std::vector<BigRational> v(static_cast<std::size_t>(power) + 1, BigRational(0));
  v.back() = c;
  return PolyK(std::move(v));
}

void PolyK::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  for (auto& c : coeffs_) c.canonicalize();
}

BigRational PolyK::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigRational PolyK::leading() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

BigRational PolyK::operator()(const BigRational& at) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

double PolyK::eval(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

PolyK PolyK::taylor_shift(const BigRational& shift) const {
  // Horner in the shifted variable: p(t + s) = (...(c_n (t+s) + c_{n-1})(t+s) ...).
  PolyK acc;
  const PolyK t_plus_s{shift, BigRational(1)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t_plus_s;
    acc += PolyK(*it);
  }
  return acc;
}

PolyK& PolyK::operator+=(const PolyK& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyK& PolyK::operator-=(const PolyK& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyK& PolyK::operator*=(const PolyK& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyK PolyK::operator-() const {
  PolyK r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

void PolyK::divmod(const PolyK& a, const PolyK& b, PolyK& quot, PolyK& rem) {
  if (b.is_zero()) throw std::domain_error("PolyK: division by the zero polynomial");
  std::vector<BigRational> q;
  std::vector<BigRational> r = a.coeffs_;
  const int db = b.degree();
  if (a.degree() >= db) q.assign(static_cast<std::size_t>(a.degree() - db + 1), BigRational(0));
  const BigRational lead = b.leading();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    const BigRational c = r[static_cast<std::size_t>(i)] / lead;
    if (sgn(c) == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
  }
  quot = PolyK(std::move(q));
  rem = PolyK(std::move(r));
}

PolyK PolyK::gcd(PolyK a, PolyK b) {
  while (!b.is_zero()) {
    PolyK q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyK PolyK::monic() const {
  if (is_zero()) return *this;
  PolyK r = *this;
  const BigRational lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

std::string PolyK::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigRational c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = (c == 1);
    if (i == 0 || !unit) os << c.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFnK

RatFnK::RatFnK(PolyK num, PolyK den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFnK: zero denominator");
  normalize();
}

void RatFnK::normalize() {
  if (num_.is_zero()) {
    den_ = PolyK(1);
    return;
  }
  if (den_.degree() > 0) {
    const PolyK g = PolyK::gcd(num_, den_);
    if (g.degree() > 0) {
      PolyK q, r;
      PolyK::divmod(num_, g, q, r);
      num_ = q;
      PolyK::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  const BigRational lead = den_.leading();
  if (lead != 1) {
    const PolyK inv(BigRational(1) / lead);
    num_ *= inv;
    den_ *= inv;
  }
}

BigRational RatFnK::constant_value() const {
  if (!is_constant()) throw std::domain_error("RatFnK: not a constant: " + str());
  return num_.coeff(0) / den_.coeff(0);
}

BigRational RatFnK::operator()(const BigRational& at) const {
  const BigRational d = den_(at);
  if (sgn(d) == 0) throw std::domain_error("RatFnK: pole at k = " + at.get_str());
  return num_(at) / d;
}

double RatFnK::eval(double at) const { return num_.eval(at) / den_.eval(at); }

RatFnK& RatFnK::operator+=(const RatFnK& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFnK& RatFnK::operator-=(const RatFnK& o) { return *this += -o; }

RatFnK& RatFnK::operator*=(const RatFnK& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFnK& RatFnK::operator/=(const RatFnK& o) {
  if (o.is_zero()) throw std::domain_error("RatFnK: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFnK RatFnK::operator-() const {
  RatFnK r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFnK::str(const std::string& var) const {
  if (is_polynomial()) {
    // den is the constant 1 after normalization
    return num_.str(var);
  }
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

// ---------------------------------------------------------------- linear algebra

RatMatrix rref(RatMatrix m) {
  if (m.empty()) return m;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[pivot_row]);
    const RatFnK inv = RatFnK(1) / m[pivot_row][c];
    for (auto& e : m[pivot_row]) e *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][c].is_zero()) continue;
      const RatFnK factor = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] -= factor * m[pivot_row][j];
    }
    ++pivot_row;
  }
  m.resize(pivot_row);
  return m;
}

RatMatrix null_space(const RatMatrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m.front().size();
  const RatMatrix r = rref(m);
  std::vector<int> pivot_of_col(cols, -1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!r[i][c].is_zero()) {
        pivot_of_col[c] = static_cast<int>(i);
        break;
      }
    }
  }
  RatMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<RatFnK> z(cols, RatFnK(0));
    z[free] = RatFnK(1);
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_of_col[c] >= 0) z[c] = -r[static_cast<std::size_t>(pivot_of_col[c])][free];
    }
    basis.push_back(std::move(z));
  }
  return basis;
}

}  // namespace c5min
