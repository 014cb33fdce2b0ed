#ifndef C5MIN_SYMCERT_HPP
#define C5MIN_SYMCERT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "c5min/flagalg.hpp"
#include "c5min/parallel.hpp"
#include "c5min/polyk.hpp"

namespace c5min {

/// A structural check of the certificate failed. This invalidates the proof.
class CertificateFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using PolyMatrix = std::vector<std::vector<PolyK>>;

/// alpha(k) = (60k^3 - 240k^2 + 360k - 192) / k^3.
RatFnK alpha_fn();
/// lambda(k) = 1/10 - 1/(2k) + 1/k^2 - 1/k^3 + 2/(5k^4).
RatFnK lambda_fn();
/// Edge density 1 - 1/k.
RatFnK p_fn();

PolyMatrix matrix_A();
PolyMatrix matrix_B();
/// M = 3/(2k^4) B^T A B.
RatMatrix matrix_M();
/// M with k substituted.
std::vector<std::vector<BigRational>> matrix_M_at(const BigRational& k);

/// The three leading principal minors of A as polynomials in k.
std::vector<PolyK> leading_minors_A();

struct PerKVerdict {
  long k = 0;
  std::vector<BigRational> minors;
  bool positive = false;
};

struct ShiftVerdict {
  /// Coefficients of each minor in t = k - 3, ascending.
  std::vector<PolyK> shifted;
  /// One entry per minor: all coefficients >= 0 and constant term > 0.
  std::vector<bool> minor_proved;
  bool proved = false;  // all minors proved
};

struct RangeVerdict {
  long kmax = 0;
  bool all_positive = false;
  std::optional<long> first_failure;
};

/// Throws std::domain_error for k < 3.
PerKVerdict psd_check_A_at(long k);
ShiftVerdict psd_check_A_shift();
RangeVerdict psd_check_A_range(long kmax, const ParallelFor& pfor = serial_for());

/// c_F = c_F^OPT + alpha p - alpha p(K2,F) - c_F^M for each column of the table.
std::vector<RatFnK> cF_symbolic(const CoeffTable& table, const std::vector<std::int64_t>& copt,
                                const std::vector<BigRational>& pk2);
/// Same, for the computed table and vectors in internal column order.
std::vector<RatFnK> cF_symbolic();
/// c_F^M(k) = sum_{i<=j} mult(i,j) M_ij(k) table(i,j,F), evaluated at integer k.
std::vector<BigRational> cFM_at(const CoeffTable& table, const BigRational& k);

struct NontightEntry {
  int index = 0;            // column in enumerate_classes(5)
  BigRational excess;       // c_F - 120 lambda, a constant
  long m = 0;               // k^4 coefficient of 5k^4 c_F
};

struct CertReport {
  std::vector<RatFnK> cf;
  std::vector<long> m;      // per class: 5k^4 c_F = m k^4 - 300k^3 + 600k^2 - 600k + 240
  std::vector<int> tight;
  std::vector<NontightEntry> nontight;
  bool min_cf_equals_120lambda = false;
  ShiftVerdict shift;
  bool kernel_ok = false;
};

/// Rebuilds every c_F symbolically and checks the certificate structure.
/// Throws CertificateFailure on any structural violation.
CertReport verify_certificate();

/// (1/120) min_F c_F(k). Throws std::domain_error for k < 3 and
/// CertificateFailure if A(k) is not positive definite.
BigRational lower_bound(long k);

/// RREF of a basis of null(B) over Q(k). Throws CertificateFailure if rank(B) != 3.
RatMatrix kernel_rref();
/// The published kernel basis the RREF is compared against.
RatMatrix reference_kernel();

struct NontightGraph {
  SmallGraph graph;
  std::string graph6;
  BigRational excess;
};

/// The non-tight graphs in internal canonical order.
std::vector<NontightGraph> nontight_export();

}  // namespace c5min

#endif  // C5MIN_SYMCERT_HPP
