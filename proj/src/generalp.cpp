#include "c5min/generalp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "c5min/symcert.hpp"

namespace c5min {

namespace {

template <class T>
T falling(long a, int j) {
  T r(1);
  for (int i = 0; i < j; ++i) r *= T(a - i);
  return r;
}

template <class T>
T f_impl(int k, const T& x, const T& y, const T& rho) {
  const long kk = k - 1;
  const T f2 = falling<T>(kk, 2), f3 = falling<T>(kk, 3), f4 = falling<T>(kk, 4), f5 = falling<T>(kk, 5);
  const T half = T(1) / T(2);
  const T x2 = x * x, y2 = y * y;
  T s = (f5 / T(10) + half * f4 + half * f3) * x2 * x2 * x;
  s += (half * f4 + T(3) * half * f3 + half * f2) * x2 * x2 * y;
  s += ((half + half * rho) * f3 + (T(1) + half * rho) * f2) * x2 * x * y2;
  s += ((half * rho + half * rho * rho) * f2 + half * rho * T(kk)) * x2 * y2 * y;
  s += half * rho * rho * rho * T(kk) * x * y2 * y2;
  return s;
}

template <class T>
T g_impl(int k, const T& x, const T& y, const T& rho) {
  const long kk = k - 1;
  return falling<T>(kk, 2) * x * x + T(2 * kk) * x * y + rho * y * y;
}

template <class T>
T rho_impl(int k, const T& p, const T& x, const T& y, Convention conv) {
  const long kk = k - 1;
  const T c = conv == Convention::A ? falling<T>(kk, 2) : T(1);
  return (p - c * x * x - T(2 * kk) * x * y) / (y * y);
}

template <class T>
T k2_impl(const T& x, const T& p) {
  const T x2 = x * x;
  const T a = T(2) * x2 - T(2) * x + p;
  const T b = T(3) * x2 * x2 - T(5) * x2 * x + (T(1) + T(4) * p) * x2 + (T(1) - T(4) * p) * x + p * p;
  const T d = x - T(1);
  return x * a * b / (T(2) * d * d);
}

double lambda_double(int k) { return lambda_fn()(BigRational(k)).get_d(); }

}  // namespace

double f_value(int k, double x, double y, double rho) { return f_impl<double>(k, x, y, rho); }
BigRational f_exact(int k, const BigRational& x, const BigRational& y, const BigRational& rho) {
  return f_impl<BigRational>(k, x, y, rho);
}
double g_value(int k, double x, double y, double rho) { return g_impl<double>(k, x, y, rho); }
BigRational g_exact(int k, const BigRational& x, const BigRational& y, const BigRational& rho) {
  return g_impl<BigRational>(k, x, y, rho);
}

const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::feasible: return "feasible";
    case Feasibility::boundary: return "boundary";
    case Feasibility::infeasible: return "infeasible";
  }
  return "?";
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal_grid: return "optimal-grid";
    case SolveStatus::boundary: return "boundary";
    case SolveStatus::infeasible: return "infeasible";
  }
  return "?";
}

RhoResult rho_from(int k, double p, double x, Convention conv) {
  const double y = 1.0 - (k - 1) * x;
  if (y <= kRhoTol) throw DegeneratePartition("rho_from: y = 1 - (k-1)x = " + std::to_string(y) + " leaves no Y part");
  RhoResult r;
  r.rho = rho_impl<double>(k, p, x, y, conv);
  if (std::abs(r.rho) <= kRhoTol || std::abs(r.rho - 0.5) <= kRhoTol)
    r.status = Feasibility::boundary;
  else if (r.rho > 0 && r.rho < 0.5)
    r.status = Feasibility::feasible;
  else
    r.status = Feasibility::infeasible;
  return r;
}

BigRational rho_exact(int k, const BigRational& p, const BigRational& x, Convention conv) {
  const BigRational y = 1 - (k - 1) * x;
  if (sgn(y) <= 0) throw DegeneratePartition("rho_exact: y = 1 - (k-1)x is not positive");
  return rho_impl<BigRational>(k, p, x, y, conv);
}

// ---------------------------------------------------------------- solver

namespace {

// Real roots of a x^2 + b x + c.
std::vector<double> quadratic_roots(double a, double b, double c) {
  std::vector<double> r;
  if (std::abs(a) < 1e-300) {
    if (std::abs(b) > 1e-300) r.push_back(-c / b);
    return r;
  }
  const double disc = b * b - 4 * a * c;
  if (disc < -1e-14 * std::max(1.0, b * b)) return r;
  const double sq = std::sqrt(std::max(0.0, disc));
  // Numerically stable pair.
  const double q = -0.5 * (b + std::copysign(sq, b));
  if (q != 0) {
    r.push_back(q / a);
    r.push_back(c / q);
  } else {
    r.push_back(0.0);
  }
  return r;
}

bool feasible_at(int k, double p, double x, double slack) {
  const double y = 1.0 - (k - 1) * x;
  if (x < -slack || y <= kRhoTol) return false;
  const double rho = rho_impl<double>(k, p, x, y, Convention::A);
  return rho >= -slack && rho <= 0.5 + slack;
}

double objective(int k, double p, double x) {
  const double y = 1.0 - (k - 1) * x;
  return f_value(k, x, y, rho_impl<double>(k, p, x, y, Convention::A));
}

}  // namespace

std::vector<std::pair<double, double>> feasible_x_intervals(int k, double p) {
  if (k < 2) throw std::invalid_argument("feasible_x_intervals: k must be at least 2");
  const double kk = k - 1;
  const double c = (kk) * (kk - 1);
  const double xmax = 1.0 / kk;
  // N(x) = p - 2Kx + (2K^2 - c) x^2 >= 0 and N(x) - (1 - Kx)^2 / 2 <= 0.
  std::vector<double> cuts{0.0, xmax};
  for (double r : quadratic_roots(2 * kk * kk - c, -2 * kk, p)) cuts.push_back(r);
  for (double r : quadratic_roots(2 * kk * kk - c - kk * kk / 2, -2 * kk + kk, p - 0.5)) cuts.push_back(r);
  std::vector<double> pts;
  for (double v : cuts)
    if (v >= 0 && v <= xmax) pts.push_back(v);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const double slack = 1e-12;
  std::vector<std::pair<double, double>> out;
  auto add = [&](double lo, double hi) {
    hi = std::min(hi, xmax * (1 - 1e-12));
    if (hi < lo) return;
    if (!out.empty() && lo <= out.back().second + 1e-15)
      out.back().second = std::max(out.back().second, hi);
    else
      out.emplace_back(lo, hi);
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (feasible_at(k, p, pts[i], slack)) add(pts[i], pts[i]);
    if (i + 1 < pts.size() && feasible_at(k, p, 0.5 * (pts[i] + pts[i + 1]), 0.0)) add(pts[i], pts[i + 1]);
  }
  return out;
}

namespace {

double golden(int k, double p, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = objective(k, p, c), fd = objective(k, p, d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(k, p, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(k, p, d);
    }
    if (c == d) break;
  }
  return fc <= fd ? c : d;
}

}  // namespace

int regime_k(double p) {
  if (!(p >= 0.5 && p < 1)) throw std::invalid_argument("regime_k: p must lie in [1/2, 1)");
  int k = 2;
  while (p >= turan_density(k + 1)) {
    if (++k > 10000000) throw std::invalid_argument("regime_k: p too close to 1");
  }
  return k;
}

double turan_density(int k) { return 1.0 - 1.0 / k; }

Solution fmin(int k, double p, const FminOptions& opt) {
  if (k < 2) throw std::invalid_argument("fmin: k must be at least 2");
  if (!(p > 0 && p < 1)) throw std::invalid_argument("fmin: p must lie in (0, 1)");
  if (opt.grid < 3) throw std::invalid_argument("fmin: grid needs at least 3 points");
  Solution best;
  const auto intervals = feasible_x_intervals(k, p);
  if (intervals.empty()) return best;

  bool have = false;
  auto consider = [&](double x, double value, bool at_boundary) {
    if (!have || value < best.value) {
      have = true;
      best.x = x;
      best.y = 1.0 - (k - 1) * x;
      best.rho = rho_impl<double>(k, p, x, best.y, Convention::A);
      best.value = value;
      best.status = at_boundary ? SolveStatus::boundary : SolveStatus::optimal_grid;
    }
  };

  double total = 0;
  for (auto [lo, hi] : intervals) total += hi - lo;
  for (auto [lo, hi] : intervals) {
    consider(lo, objective(k, p, lo), true);
    consider(hi, objective(k, p, hi), true);
    if (hi <= lo) continue;
    const int m = std::max(3, static_cast<int>(opt.grid * (hi - lo) / total));
    std::vector<double> xs(static_cast<std::size_t>(m)), hs(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      xs[static_cast<std::size_t>(i)] = i + 1 == m ? hi : lo + (hi - lo) * i / (m - 1);
      hs[static_cast<std::size_t>(i)] = objective(k, p, xs[static_cast<std::size_t>(i)]);
    }
    for (int i = 1; i + 1 < m; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (hs[u] <= hs[u - 1] && hs[u] <= hs[u + 1]) {
        const double x = golden(k, p, xs[u - 1], xs[u + 1], opt.tol);
        consider(x, objective(k, p, x), false);
      }
    }
  }

  // Turan points are feasible exactly at the regime endpoints; evaluate them exactly.
  auto turan_candidate = [&](const BigRational& x, const BigRational& y, const BigRational& rho) {
    const double value = f_exact(k, x, y, rho).get_d();
    if (value <= best.value + 1e-12) {
      best.x = x.get_d();
      best.y = y.get_d();
      best.rho = rho.get_d();
      best.value = value;
      best.status = SolveStatus::boundary;
    }
  };
  if (p == turan_density(k)) turan_candidate(ratio(1, k), ratio(1, k), BigRational(0));
  if (p == turan_density(k + 1)) turan_candidate(ratio(1, k + 1), ratio(2, k + 1), BigRational(1, 2));
  return best;
}

double secant_L(double p) {
  const int k = regime_k(p);
  const double pk = turan_density(k), pk1 = turan_density(k + 1);
  const double lk = lambda_double(k);
  if (p == pk) return lk;
  return lk + (p - pk) / (pk1 - pk) * (lambda_double(k + 1) - lk);
}

BigRational secant_L_exact(const BigRational& p) {
  if (p < BigRational(1, 2) || p >= 1) throw std::invalid_argument("secant_L_exact: p must lie in [1/2, 1)");
  int k = regime_k(std::min(p.get_d(), std::nextafter(1.0, 0.0)));
  auto tp = [](int j) -> BigRational { return 1 - ratio(1, j); };
  while (k > 2 && p < tp(k)) --k;
  while (p >= tp(k + 1)) ++k;
  const BigRational lk = lambda_fn()(BigRational(k)), lk1 = lambda_fn()(BigRational(k + 1));
  return lk + (p - tp(k)) / (tp(k + 1) - tp(k)) * (lk1 - lk);
}

std::vector<CurveRow> fmin_curve(double from, double to, double step, bool include_knots, const ParallelFor& pfor) {
  if (!(step > 0) || from > to) throw std::invalid_argument("fmin_curve: need from <= to and step > 0");
  if (from < 0.5 || to >= 1) throw std::invalid_argument("fmin_curve: grid must lie within [1/2, 1)");
  const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> ps;
  for (long i = 0; i < count; ++i) ps.push_back(from + step * static_cast<double>(i));
  // Snap grid points that coincide with a Turan density.
  for (int k = 2; turan_density(k) <= to + 1e-12; ++k) {
    const double t = turan_density(k);
    if (t < from - 1e-12) continue;
    bool found = false;
    for (double& p : ps)
      if (std::abs(p - t) <= 1e-12) {
        p = t;
        found = true;
      }
    if (!found && include_knots) ps.push_back(t);
  }
  std::sort(ps.begin(), ps.end());
  std::vector<CurveRow> rows(ps.size());
  pfor(ps.size(), [&](std::size_t i) {
    CurveRow& r = rows[i];
    r.p = ps[i];
    r.fmin = fmin(regime_k(r.p), r.p).value;
    r.L = secant_L(r.p);
    r.gap = r.fmin - r.L;
  });
  return rows;
}

double k2_reduced(double x, double p) {
  if (x == 1) throw std::domain_error("k2_reduced: x = 1");
  return k2_impl<double>(x, p);
}

BigRational k2_reduced_exact(const BigRational& x, const BigRational& p) {
  if (x == 1) throw std::domain_error("k2_reduced: x = 1");
  return k2_impl<BigRational>(x, p);
}

ConventionReport k2_convention_report() {
  ConventionReport rep;
  rep.a_matches_all = rep.b_matches_all = true;
  for (int i = 1; i <= 20; ++i) {
    ConventionSample s;
    s.x = ratio(i, 25);
    s.p = BigRational(1, 2) + ratio(i, 130);
    const BigRational y = 1 - s.x;
    s.display = k2_reduced_exact(s.x, s.p);
    s.conv_a = f_exact(2, s.x, y, rho_exact(2, s.p, s.x, Convention::A));
    s.conv_b = f_exact(2, s.x, y, rho_exact(2, s.p, s.x, Convention::B));
    s.a_matches = s.conv_a == s.display;
    s.b_matches = s.conv_b == s.display;
    rep.a_matches_all = rep.a_matches_all && s.a_matches;
    rep.b_matches_all = rep.b_matches_all && s.b_matches;
    rep.samples.push_back(std::move(s));
  }
  rep.verdict = rep.a_matches_all ? (rep.b_matches_all ? "both" : "A") : (rep.b_matches_all ? "B" : "neither");
  return rep;
}

// ---------------------------------------------------------------- construction

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ConstructionLayout construction_layout(int k, int n, double x, double rho) {
  if (k < 2) throw std::invalid_argument("construction: k must be at least 2");
  if (!(x > 0 && (k - 1) * x < 1)) throw std::invalid_argument("construction: x must lie in (0, 1/(k-1))");
  if (!(rho > 0 && rho < 0.5)) throw std::invalid_argument("construction: rho must lie in (0, 1/2)");
  ConstructionLayout l;
  l.k = k;
  l.n = n;
  l.part = static_cast<int>(std::floor(x * n + 1e-9));
  l.y_begin = (k - 1) * l.part;
  l.y_size = n - l.y_begin;
  l.y_half = l.y_size / 2;
  if (l.part < 1 || l.y_size < 2) throw std::invalid_argument("construction: n too small for these parameters");
  return l;
}

Graph build_construction(int k, int n, double x, double rho, std::uint64_t seed) {
  const ConstructionLayout l = construction_layout(k, n, x, rho);
  Graph g(n);
  for (int u = 0; u < l.y_begin; ++u)
    for (int v = u + 1; v < n; ++v)
      if (v >= l.y_begin || u / l.part != v / l.part) g.add_edge(u, v);
  const double prob = 2 * rho;
  const int second = l.y_size - l.y_half;
  for (int i = 0; i < l.y_half; ++i)
    for (int j = 0; j < second; ++j) {
      const auto idx = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(second) + static_cast<std::uint64_t>(j);
      const double u01 = static_cast<double>(splitmix64(seed, idx) >> 11) * 0x1.0p-53;
      if (u01 < prob) g.add_edge(l.y_begin + i, l.y_begin + l.y_half + j);
    }
  return g;
}

RegularityReport regularity_report(const Graph& g, const ConstructionLayout& l, double rho) {
  RegularityReport r;
  const int ny = l.y_size;
  std::vector<double> deg(static_cast<std::size_t>(ny), 0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < ny; ++i)
    for (int j = i + 1; j < ny; ++j)
      if (g.has_edge(l.y_begin + i, l.y_begin + j)) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
        edges.emplace_back(i, j);
      }
  double triangles = 0;
  for (auto [i, j] : edges)
    for (int w = j + 1; w < ny; ++w)
      if (g.has_edge(l.y_begin + i, l.y_begin + w) && g.has_edge(l.y_begin + j, l.y_begin + w)) ++triangles;

  double s1 = 0, s2 = 0;
  r.target_degree = ny * rho;
  int close = 0;
  for (double d : deg) {
    s1 += d;
    s2 += d * d;
    r.paths2 += d * (d - 1) / 2;
    if (std::abs(d - r.target_degree) <= 0.1 * r.target_degree) ++close;
  }
  r.mean_degree = s1 / ny;
  r.second_moment_ratio = (s2 / ny) / (r.mean_degree * r.mean_degree);
  r.within_10pct = static_cast<double>(close) / ny;
  r.edges = static_cast<double>(edges.size());
  for (auto [i, j] : edges) r.paths3 += (deg[static_cast<std::size_t>(i)] - 1) * (deg[static_cast<std::size_t>(j)] - 1);
  r.paths3 -= 3 * triangles;
  const double y = ny;
  r.edges_target = 0.5 * y * y * rho;
  r.paths2_target = 0.5 * y * y * y * rho * rho;
  r.paths3_target = 0.5 * y * y * y * y * rho * rho * rho;
  return r;
}

}  // namespace c5min
