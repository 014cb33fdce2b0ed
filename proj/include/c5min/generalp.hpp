#ifndef C5MIN_GENERALP_HPP
#define C5MIN_GENERALP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "c5min/graph.hpp"
#include "c5min/parallel.hpp"
#include "c5min/polyk.hpp"

namespace c5min {

/// Limit C5 density of the (k-1) x Y construction; falling factorials of k-1.
double f_value(int k, double x, double y, double rho);
BigRational f_exact(int k, const BigRational& x, const BigRational& y, const BigRational& rho);
/// Limit edge density (k-1)_2 x^2 + 2(k-1) x y + rho y^2.
double g_value(int k, double x, double y, double rho);
BigRational g_exact(int k, const BigRational& x, const BigRational& y, const BigRational& rho);

/// How rho is recovered from g = p. A keeps the (k-1)_2 x^2 term of g;
/// B always subtracts x^2, as written for k = 2 in the source display.
enum class Convention { A, B };

enum class Feasibility { feasible, boundary, infeasible };
const char* to_string(Feasibility f);

/// y = 1 - (k-1)x is zero or negative: the partition has no Y part.
class DegeneratePartition : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kRhoTol = 1e-12;

struct RhoResult {
  double rho = 0;
  Feasibility status = Feasibility::infeasible;
};

/// rho in (0, 1/2) is feasible; within kRhoTol of 0 or 1/2 is boundary.
RhoResult rho_from(int k, double p, double x, Convention conv = Convention::A);
BigRational rho_exact(int k, const BigRational& p, const BigRational& x, Convention conv = Convention::A);

enum class SolveStatus { optimal_grid, boundary, infeasible };
const char* to_string(SolveStatus s);

struct Solution {
  double x = 0, y = 0, rho = 0;
  double value = 0;
  SolveStatus status = SolveStatus::infeasible;
};

struct FminOptions {
  double tol = 1e-12;
  int grid = 10000;
};

/// Closed x-intervals on which rho(x) lies in [0, 1/2] and y > 0.
std::vector<std::pair<double, double>> feasible_x_intervals(int k, double p);

/// Global minimum of x -> f(k, x, 1-(k-1)x, rho(x)) over the feasible x.
/// Throws std::invalid_argument unless k >= 2 and 0 < p < 1.
Solution fmin(int k, double p, const FminOptions& opt = {});

/// k >= 2 with 1 - 1/k <= p < 1 - 1/(k+1).
int regime_k(double p);
/// The double nearest 1 - 1/k, as used for knots everywhere.
double turan_density(int k);
/// Piecewise-linear interpolant through (1 - 1/k, lambda(k)), k >= 2, for p in [1/2, 1).
double secant_L(double p);
BigRational secant_L_exact(const BigRational& p);

struct CurveRow {
  double p = 0;
  double fmin = 0;
  double L = 0;
  double gap = 0;  // fmin - L
};

/// Rows at from + i*step up to `to` (inclusive within 1e-9). With include_knots,
/// every Turan density in [from, to] is merged in as its own row.
std::vector<CurveRow> fmin_curve(double from, double to, double step, bool include_knots = false,
                                 const ParallelFor& pfor = serial_for());

/// x(2x^2-2x+p)(3x^4-5x^3+(1+4p)x^2+(1-4p)x+p^2) / (2(x-1)^2). Throws for x = 1.
double k2_reduced(double x, double p);
BigRational k2_reduced_exact(const BigRational& x, const BigRational& p);

struct ConventionSample {
  BigRational x, p;
  BigRational display, conv_a, conv_b;
  bool a_matches = false, b_matches = false;
};
struct ConventionReport {
  std::vector<ConventionSample> samples;
  bool a_matches_all = false;
  bool b_matches_all = false;
  /// "A", "B", "both" or "neither".
  std::string verdict;
};
/// Compares both conventions with the k = 2 display at 20 fixed rational points.
ConventionReport k2_convention_report();

// ---------------------------------------------------------------- construction

/// Counter-based generator: the same (seed, index) always gives the same word.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index);

struct ConstructionLayout {
  int k = 0;
  int n = 0;
  int part = 0;        // size of each X_i, floor(x n)
  int y_size = 0;      // n - (k-1) part
  int y_half = 0;      // first half of Y, floor(y_size/2)
  int y_begin = 0;     // first Y vertex
};

/// Throws std::invalid_argument for k < 2, x outside (0, 1/(k-1)), rho outside (0, 1/2) or |Y| < 2.
ConstructionLayout construction_layout(int k, int n, double x, double rho);

/// X_1..X_{k-1} independent of size floor(xn), complete to each other and to Y;
/// G[Y] random bipartite between its halves with edge probability 2 rho.
Graph build_construction(int k, int n, double x, double rho, std::uint64_t seed);

struct RegularityReport {
  double mean_degree = 0;
  double target_degree = 0;       // |Y| rho
  double second_moment_ratio = 0; // E[Z^2] / E[Z]^2
  double within_10pct = 0;        // fraction of Y with |deg - target| <= 0.1 target
  double edges = 0, paths2 = 0, paths3 = 0;
  double edges_target = 0, paths2_target = 0, paths3_target = 0;  // y^2 n^2 rho / 2, ...
};

/// Degree statistics and the edge / 2-path / 3-path counts of G[Y].
RegularityReport regularity_report(const Graph& g, const ConstructionLayout& layout, double rho);

}  // namespace c5min

#endif  // C5MIN_GENERALP_HPP
