#ifndef C5MIN_IDENTITY_HPP
#define C5MIN_IDENTITY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "c5min/graph.hpp"
#include "c5min/polyk.hpp"

namespace c5min {

/// Entry i counts 2-sets {u,v} avoiding r whose triple rooted at r has flag type i.
using YVector = std::array<std::int64_t, 6>;

/// Throws std::invalid_argument if |G| < 3 or r is not a vertex.
YVector y_vector(const Graph& g, int r);

/// (1/30) sum over r and ordered pairs of disjoint 2-sets avoiding r of M(k)[t1][t2].
/// Zero when |G| < 5. Throws std::domain_error for k < 3.
BigRational qform_injective(const Graph& g, long k);
/// Same value by direct enumeration of every configuration; for small graphs.
BigRational qform_injective_brute(const Graph& g, long k);
/// (4/5!) sum_r Y_r^T M(k) Y_r, degenerate configurations included.
BigRational qform_full(const Graph& g, long k);

/// sum_F c^M_F(k) P(F, G), P the number of 5-sets inducing F.
BigRational bridge_rhs(const Graph& g, long k);

struct IdentityCheck {
  BigRational lhs_injective;  // qform_injective
  BigRational rhs;            // bridge_rhs
  bool equal = false;
  /// LHS - RHS of the full finite identity: C5 count + alpha/5! (p n^5 - 2 e(G) n^3)
  /// - (4/5!) sum_r Y_r^T M Y_r - sum_F c_F P(F, G). The alpha term carries the sign
  /// fixed by the definition of c_F; only O(n^4) remains.
  BigRational residual;
};

IdentityCheck check_identity(const Graph& g, long k);

}  // namespace c5min

#endif  // C5MIN_IDENTITY_HPP
