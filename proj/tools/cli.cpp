#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "c5min/extremal.hpp"
#include "c5min/flagalg.hpp"
#include "c5min/generalp.hpp"
#include "c5min/graph.hpp"
#include "c5min/identity.hpp"
#include "c5min/parallel.hpp"
#include "c5min/symcert.hpp"

namespace c5min::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20190605;

// Raised for bad flag values found after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
};

struct Result {
  std::string body;
  int code = kExitOk;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string q(const BigRational& v) { return to_string(v); }

Json header(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
  return s + "\n";
}

ParallelFor pool(const Common& c) { return c.jobs > 1 ? threaded_for(c.jobs) : serial_for(); }

void add_common(CLI::App* sub, Common& c, const std::string& default_format = "json") {
  // The options are shared across subcommands, so the default is applied once this one is selected.
  sub->preparse_callback([&c, default_format](std::size_t) { c.format = default_format; });
  sub->add_option("--format", c.format, "Report format (default " + default_format + ")")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out, "Write the report to this file instead of stdout");
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write " + path);
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::optional<long> k;
  std::string k_range;
  bool symbolic = false;
};

std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("--k-range expects a..b, got '" + s + "'");
  try {
    std::size_t u1 = 0, u2 = 0;
    const long a = std::stol(s.substr(0, dots), &u1);
    const long b = std::stol(s.substr(dots + 2), &u2);
    if (u1 != dots || u2 != s.size() - dots - 2) throw std::invalid_argument(s);
    if (a < 3 || b < a) throw UsageError("--k-range needs 3 <= a <= b, got '" + s + "'");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--k-range expects integers a..b, got '" + s + "'");
  }
}

Result run_verify(const VerifyArgs& a, const Common& c) {
  if (a.k && *a.k < 3) throw UsageError("--k must be at least 3");
  std::optional<std::pair<long, long>> range;
  if (!a.k_range.empty()) range = parse_range(a.k_range);
  if (!a.k && !range && !a.symbolic) range = std::make_pair(3L, 1000L);

  Json j = header("verify");
  CertReport rep;
  try {
    rep = verify_certificate();
  } catch (const CertificateFailure& e) {
    j["ok"] = false;
    j["error"] = e.what();
    return {c.format == "json" ? dump(j) : csv_line({"error"}) + csv_line({std::string("\"") + e.what() + "\""}),
            kExitVerificationFailure};
  }
  bool ok = rep.min_cf_equals_120lambda && rep.kernel_ok;
  const auto& classes = enumerate_classes(5);

  if (c.format == "csv") {
    std::string s = csv_line({"index", "graph6", "edges", "m", "excess", "tight"});
    std::vector<std::string> excess(kNumFiveClasses, "0");
    for (const auto& e : rep.nontight) excess[static_cast<std::size_t>(e.index)] = q(e.excess);
    for (int f = 0; f < kNumFiveClasses; ++f) {
      const SmallGraph& g = classes[static_cast<std::size_t>(f)];
      s += csv_line({std::to_string(f), write_graph6(g), std::to_string(g.num_edges()),
                     std::to_string(rep.m[static_cast<std::size_t>(f)]), excess[static_cast<std::size_t>(f)],
                     excess[static_cast<std::size_t>(f)] == "0" ? "1" : "0"});
    }
    return {s, kExitOk};
  }

  j["alpha"] = alpha_fn().str();
  j["lambda"] = lambda_fn().str();
  j["m_values"] = rep.m;
  j["tight_indices"] = rep.tight;
  Json nt = Json::array();
  for (const auto& e : rep.nontight)
    nt.push_back({{"index", e.index}, {"graph6", write_graph6(classes[static_cast<std::size_t>(e.index)])}, {"m", e.m},
                  {"excess", q(e.excess)}});
  j["nontight"] = nt;
  j["min_cf_equals_120lambda"] = rep.min_cf_equals_120lambda;
  j["kernel_ok"] = rep.kernel_ok;

  Json psd;
  Json minors = Json::array();
  for (std::size_t i = 0; i < rep.shift.shifted.size(); ++i)
    minors.push_back({{"shifted", rep.shift.shifted[i].str("t")}, {"proved", static_cast<bool>(rep.shift.minor_proved[i])}});
  psd["shift"] = {{"substitution", "k = t + 3"}, {"proved", rep.shift.proved}, {"minors", minors}};
  if (range) {
    const auto [lo, hi] = *range;
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<char> pos(count, 0);
    pool(c)(count, [&](std::size_t i) { pos[i] = psd_check_A_at(lo + static_cast<long>(i)).positive ? 1 : 0; });
    Json r = {{"from", lo}, {"to", hi}, {"all_positive", true}, {"first_failure", nullptr}};
    for (std::size_t i = 0; i < count; ++i)
      if (!pos[i]) {
        r["all_positive"] = false;
        r["first_failure"] = lo + static_cast<long>(i);
        ok = false;
        break;
      }
    psd["range"] = r;
  }
  if (a.k) {
    const PerKVerdict v = psd_check_A_at(*a.k);
    Json ms = Json::array();
    for (const auto& m : v.minors) ms.push_back(q(m));
    psd["at_k"] = {{"k", *a.k}, {"minors", ms}, {"positive", v.positive}};
    if (!v.positive) {
      ok = false;
    } else {
      const BigRational lb = lower_bound(*a.k);
      const BigRational lam = lambda_fn()(BigRational(*a.k));
      j["lower_bound"] = {{"k", *a.k}, {"value", q(lb)}, {"value_float", lb.get_d()}, {"equals_lambda", lb == lam}};
      ok = ok && lb == lam;
    }
  }
  j["psd"] = psd;
  j["ok"] = ok;
  return {dump(j), ok ? kExitOk : kExitVerificationFailure};
}

// ---------------------------------------------------------------- table / align

std::filesystem::path default_table() { return data_dir() / "appendix_a.csv"; }

Result run_table(const std::string& order, const std::string& paper_table, const Common& c) {
  const auto& classes = enumerate_classes(5);
  const auto cols = computed_columns();  // 23 integers per internal class
  std::vector<int> show(kNumFiveClasses);  // show[position] = internal column
  for (int i = 0; i < kNumFiveClasses; ++i) show[static_cast<std::size_t>(i)] = i;
  if (order == "paper") {
    const Alignment al = align_to_paper(load_paper_data(paper_table.empty() ? default_table() : std::filesystem::path(paper_table)));
    for (int i = 0; i < kNumFiveClasses; ++i) show[static_cast<std::size_t>(al.perm[static_cast<std::size_t>(i)])] = i;
  }
  auto row_values = [&](int r) {
    std::vector<std::int64_t> v;
    for (int col : show) v.push_back(cols[static_cast<std::size_t>(col)][static_cast<std::size_t>(r)]);
    return v;
  };
  std::vector<std::string> names;
  for (int col : show) names.push_back(write_graph6(classes[static_cast<std::size_t>(col)]));

  if (c.format == "csv") {
    std::vector<std::string> head{"row"};
    head.insert(head.end(), names.begin(), names.end());
    std::string s = csv_line(head);
    for (int r = 0; r < 2 + kNumProductRows; ++r) {
      std::string label = r == 0 ? "copt" : r == 1 ? "pk2x10" : "";
      if (r >= 2) {
        auto [i, jj] = product_row_pair(r - 2);
        label = "X" + std::to_string(i + 1) + "X" + std::to_string(jj + 1) + "x30";
      }
      std::vector<std::string> cells{label};
      for (auto v : row_values(r)) cells.push_back(std::to_string(v));
      s += csv_line(cells);
    }
    return {s, kExitOk};
  }
  Json j = header("table");
  j["order"] = order;
  j["scale"] = 30;
  j["columns"] = names;
  j["copt"] = row_values(0);
  j["pk2x10"] = row_values(1);
  Json rows = Json::array();
  for (int r = 0; r < kNumProductRows; ++r) {
    auto [i, jj] = product_row_pair(r);
    rows.push_back({{"i", i + 1}, {"j", jj + 1}, {"values", row_values(r + 2)}});
  }
  j["rows"] = rows;
  return {dump(j), kExitOk};
}

Result run_align(const std::string& paper_table, const Common& c) {
  const auto path = paper_table.empty() ? default_table() : std::filesystem::path(paper_table);
  PaperData data;
  try {
    data = load_paper_data(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  Json j = header("align");
  try {
    const Alignment al = align_to_paper(data);
    const auto& classes = enumerate_classes(5);
    if (c.format == "csv") {
      std::string s = csv_line({"internal", "paper", "graph6"});
      for (std::size_t i = 0; i < al.perm.size(); ++i)
        s += csv_line({std::to_string(i), std::to_string(al.perm[i] + 1), write_graph6(classes[i])});
      return {s, kExitOk};
    }
    j["ok"] = true;
    std::vector<int> one_based;
    for (int p : al.perm) one_based.push_back(p + 1);
    j["permutation"] = one_based;
    Json cols = Json::array();
    for (std::size_t i = 0; i < al.perm.size(); ++i)
      cols.push_back({{"internal", i}, {"paper", al.perm[i] + 1}, {"graph6", write_graph6(classes[i])}});
    j["columns"] = cols;
    return {dump(j), kExitOk};
  } catch (const CertificateDataMismatch& e) {
    j["ok"] = false;
    j["error"] = e.what();
    j["kind"] = "mismatch";
    j["data_row"] = e.row() + 1;
    j["paper_column"] = e.column() + 1;
    return {dump(j), kExitVerificationFailure};
  } catch (const AlignmentAmbiguity& e) {
    j["ok"] = false;
    j["error"] = e.what();
    j["kind"] = "ambiguous";
    std::vector<int> cs;
    for (int col : e.columns()) cs.push_back(col + 1);
    j["paper_columns"] = cs;
    return {dump(j), kExitVerificationFailure};
  }
}

// ---------------------------------------------------------------- extremal

Result run_turan(int k, int n, const std::string& g6, const Common& c) {
  if (k < 3 || n < k) throw UsageError("turan needs 3 <= k <= n");
  const TuranDensityReport r = turan_density_report(k, n);
  if (!g6.empty()) write_file(g6, write_graph6(turan_graph(k, n)) + "\n");
  const double rel = BigRational(r.gap / r.lambda).get_d();
  if (c.format == "csv") {
    return {csv_line({"k", "n", "count", "density", "lambda", "gap", "relative_gap"}) +
                csv_line({std::to_string(k), std::to_string(n), r.count.get_str(), q(r.density), q(r.lambda), q(r.gap), num(rel)}),
            kExitOk};
  }
  Json j = header("turan");
  j["k"] = k;
  j["n"] = n;
  j["parts"] = turan_part_sizes(k, n);
  j["count"] = r.count.get_str();
  j["density"] = q(r.density);
  j["density_float"] = r.density.get_d();
  j["lambda"] = q(r.lambda);
  j["lambda_float"] = r.lambda.get_d();
  j["gap"] = q(r.gap);
  j["gap_float"] = r.gap.get_d();
  j["relative_gap"] = rel;
  return {dump(j), kExitOk};
}

// ---------------------------------------------------------------- general p

Result run_fmin(int k, double p, const FminOptions& opt, const Common& c) {
  if (k < 2) throw UsageError("--k must be at least 2");
  if (!(p >= turan_density(k) - 1e-12 && p <= turan_density(k + 1) + 1e-12))
    throw UsageError("--p must lie in [1 - 1/k, 1 - 1/(k+1)]");
  const Solution s = fmin(k, p, opt);
  if (c.format == "csv")
    return {csv_line({"k", "p", "x", "y", "rho", "value", "status"}) +
                csv_line({std::to_string(k), num(p), num(s.x), num(s.y), num(s.rho), num(s.value), to_string(s.status)}),
            kExitOk};
  Json j = header("fmin");
  j["k"] = k;
  j["p"] = p;
  j["x"] = s.x;
  j["y"] = s.y;
  j["rho"] = s.rho;
  j["value"] = s.value;
  j["status"] = to_string(s.status);
  return {dump(j), kExitOk};
}

Result run_curve(double from, double to, double step, bool knots, const Common& c) {
  std::vector<CurveRow> rows;
  try {
    rows = fmin_curve(from, to, step, knots, pool(c));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c.format == "csv") {
    std::string s = csv_line({"p", "fmin", "L", "gap"});
    for (const auto& r : rows) s += csv_line({num(r.p), num(r.fmin), num(r.L), num(r.gap)});
    return {s, kExitOk};
  }
  Json j = header("fmin-curve");
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back({{"p", r.p}, {"fmin", r.fmin}, {"L", r.L}, {"gap", r.gap}});
  j["rows"] = arr;
  return {dump(j), kExitOk};
}

struct ConstructArgs {
  int k = 2, n = 0;
  double x = 0;
  std::optional<double> rho, p;
  std::uint64_t seed = kDefaultSeed;
  std::string g6;
  bool count = false;
};

Result run_construct(const ConstructArgs& a, const Common& c) {
  if (a.rho.has_value() == a.p.has_value()) throw UsageError("give exactly one of --rho and --p");
  double rho = 0;
  if (a.p) {
    const RhoResult r = rho_from(a.k, *a.p, a.x);
    if (r.status != Feasibility::feasible) throw UsageError("--p and --x give rho = " + num(r.rho) + ", not in (0, 1/2)");
    rho = r.rho;
  } else {
    rho = *a.rho;
  }
  const ConstructionLayout l = construction_layout(a.k, a.n, a.x, rho);
  const Graph g = build_construction(a.k, a.n, a.x, rho, a.seed);
  if (!a.g6.empty()) write_file(a.g6, write_graph6(g) + "\n");
  const double n = a.n;
  const double y = 1.0 - (a.k - 1) * a.x;
  const double density = static_cast<double>(g.num_edges()) / (n * (n - 1) / 2);
  const RegularityReport reg = regularity_report(g, l, rho);
  std::optional<std::int64_t> c5;
  if (a.count) c5 = count_c5(g);

  if (c.format == "csv") {
    return {csv_line({"k", "n", "x", "rho", "seed", "edges", "edge_density", "g", "f", "c5", "c5_density"}) +
                csv_line({std::to_string(a.k), std::to_string(a.n), num(a.x), num(rho), std::to_string(a.seed),
                          std::to_string(g.num_edges()), num(density), num(g_value(a.k, a.x, y, rho)),
                          num(f_value(a.k, a.x, y, rho)), c5 ? std::to_string(*c5) : "",
                          c5 ? num(static_cast<double>(*c5) / std::pow(n, 5)) : ""}),
            kExitOk};
  }
  Json j = header("construct");
  j["k"] = a.k;
  j["n"] = a.n;
  j["x"] = a.x;
  j["rho"] = rho;
  j["seed"] = a.seed;
  j["part_size"] = l.part;
  j["y_size"] = l.y_size;
  j["edges"] = g.num_edges();
  j["edge_density"] = density;
  j["g"] = g_value(a.k, a.x, y, rho);
  j["f"] = f_value(a.k, a.x, y, rho);
  if (c5) {
    j["c5"] = *c5;
    j["c5_density"] = static_cast<double>(*c5) / std::pow(n, 5);
  }
  j["regularity"] = {{"mean_degree", reg.mean_degree},        {"target_degree", reg.target_degree},
                     {"second_moment_ratio", reg.second_moment_ratio}, {"within_10pct", reg.within_10pct},
                     {"edges", reg.edges},                    {"edges_target", reg.edges_target},
                     {"paths2", reg.paths2},                  {"paths2_target", reg.paths2_target},
                     {"paths3", reg.paths3},                  {"paths3_target", reg.paths3_target}};
  return {dump(j), kExitOk};
}

// ---------------------------------------------------------------- counting / identity / nontight

Result run_count(const std::string& in, const Common& c) {
  std::vector<Graph> graphs;
  try {
    graphs = parse_graph6_lines(read_file(in));
  } catch (const ParseError& e) {
    throw UsageError(in + ": " + e.what());
  }
  std::vector<std::int64_t> counts(graphs.size());
  pool(c)(graphs.size(), [&](std::size_t i) { counts[i] = count_c5(graphs[i]); });
  if (c.format == "csv") {
    std::string s = csv_line({"index", "n", "edges", "c5"});
    for (std::size_t i = 0; i < graphs.size(); ++i)
      s += csv_line({std::to_string(i), std::to_string(graphs[i].order()), std::to_string(graphs[i].num_edges()),
                     std::to_string(counts[i])});
    return {s, kExitOk};
  }
  Json j = header("count-c5");
  Json arr = Json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i)
    arr.push_back({{"index", i}, {"n", graphs[i].order()}, {"edges", graphs[i].num_edges()}, {"c5", counts[i]}});
  j["graphs"] = arr;
  return {dump(j), kExitOk};
}

struct IdentityArgs {
  int n = 6, trials = 200;
  long k = 3;
  std::uint64_t seed = kDefaultSeed;
  bool exhaustive = false;
};

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  std::uint64_t word = 0;
  int left = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (left == 0) {
        word = rng();
        left = 64;
      }
      if (word & 1u) g.add_edge(u, v);
      word >>= 1;
      --left;
    }
  return g;
}

Result run_identity(const IdentityArgs& a, const Common& c) {
  if (a.n < 5) throw UsageError("--n must be at least 5");
  if (a.k < 3) throw UsageError("--k must be at least 3");
  if (a.exhaustive && a.n > 7) throw UsageError("--exhaustive supports n <= 7");
  std::vector<Graph> graphs;
  if (a.exhaustive) {
    for (const SmallGraph& s : enumerate_classes(a.n)) graphs.push_back(Graph::from_small(s));
  } else {
    std::mt19937_64 rng(a.seed);
    for (int t = 0; t < a.trials; ++t) graphs.push_back(random_graph(a.n, rng));
  }
  std::vector<char> ok(graphs.size(), 0);
  std::vector<double> ratio_v(graphs.size(), 0);
  const double n4 = std::pow(static_cast<double>(a.n), 4);
  pool(c)(graphs.size(), [&](std::size_t i) {
    const IdentityCheck chk = check_identity(graphs[i], a.k);
    ok[i] = chk.equal ? 1 : 0;
    ratio_v[i] = std::abs(chk.residual.get_d()) / n4;
  });
  int failures = 0;
  double max_ratio = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    failures += ok[i] ? 0 : 1;
    max_ratio = std::max(max_ratio, ratio_v[i]);
  }
  const int code = failures == 0 ? kExitOk : kExitVerificationFailure;
  if (c.format == "csv")
    return {csv_line({"n", "k", "checked", "failures", "max_residual_ratio"}) +
                csv_line({std::to_string(a.n), std::to_string(a.k), std::to_string(graphs.size()), std::to_string(failures),
                          num(max_ratio)}),
            code};
  Json j = header("identity");
  j["n"] = a.n;
  j["k"] = a.k;
  j["mode"] = a.exhaustive ? "exhaustive" : "random";
  j["checked"] = graphs.size();
  j["failures"] = failures;
  j["max_residual_ratio"] = max_ratio;
  return {dump(j), code};
}

Result run_nontight(const Common& c) {
  std::vector<NontightGraph> list;
  try {
    list = nontight_export();
  } catch (const CertificateFailure& e) {
    Json j = header("nontight");
    j["ok"] = false;
    j["error"] = e.what();
    return {dump(j), kExitVerificationFailure};
  }
  if (c.format == "csv") {
    std::string s = csv_line({"graph6", "edges", "excess"});
    for (const auto& g : list) s += csv_line({g.graph6, std::to_string(g.graph.num_edges()), q(g.excess)});
    return {s, kExitOk};
  }
  Json j = header("nontight");
  Json arr = Json::array();
  for (const auto& g : list) arr.push_back({{"graph6", g.graph6}, {"edges", g.graph.num_edges()}, {"excess", q(g.excess)}});
  j["graphs"] = arr;
  return {dump(j), kExitOk};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier and toolkit for minimum C5 density at Turan edge densities", "c5min"};
  app.require_subcommand(1);

  Common common;
  std::function<Result()> action;

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Rebuild and check the certificate");
  add_common(verify, common);
  verify->add_option("--k", va.k, "Check positivity and the lower bound at this k");
  verify->add_option("--k-range", va.k_range, "Exact positivity for every integer k in a..b");
  verify->add_flag("--symbolic", va.symbolic, "Symbolic checks only");
  verify->callback([&] { action = [&] { return run_verify(va, common); }; });

  std::string order = "internal", table_path;
  auto* table = app.add_subcommand("table", "Emit 30x the flag product table");
  add_common(table, common);
  table->add_option("--order", order, "Column order")->check(CLI::IsMember({"internal", "paper"}))->capture_default_str();
  table->add_option("--paper-table", table_path, "Published table CSV used for --order paper");
  table->callback([&] { action = [&] { return run_table(order, table_path, common); }; });

  std::string align_path;
  auto* align = app.add_subcommand("align", "Align computed columns with the published table");
  add_common(align, common);
  align->add_option("--paper-table", align_path, "Published table CSV (default: data directory)");
  align->callback([&] { action = [&] { return run_align(align_path, common); }; });

  int tk = 3, tn = 0;
  std::string turan_g6;
  auto* turan = app.add_subcommand("turan", "C5 count and density of a Turan graph");
  add_common(turan, common);
  turan->add_option("--k", tk, "Number of parts")->required();
  turan->add_option("--n", tn, "Number of vertices")->required();
  turan->add_option("--g6", turan_g6, "Also write the graph in graph6");
  turan->callback([&] { action = [&] { return run_turan(tk, tn, turan_g6, common); }; });

  int fk = 2;
  double fp = 0;
  FminOptions fopt;
  auto* fm = app.add_subcommand("fmin", "Solve the construction optimization problem at one p");
  add_common(fm, common);
  fm->add_option("--k", fk, "Regime k")->required();
  fm->add_option("--p", fp, "Edge density")->required();
  fm->add_option("--tol", fopt.tol, "Golden-section tolerance in x")->capture_default_str();
  fm->add_option("--grid", fopt.grid, "Grid points")->capture_default_str();
  fm->callback([&] { action = [&] { return run_fmin(fk, fp, fopt, common); }; });

  double cfrom = 0.5, cto = 0.875, cstep = 0.005;
  bool knots = false;
  auto* curve = app.add_subcommand("fmin-curve", "fmin, secant L and their gap over a p-grid");
  add_common(curve, common, "csv");
  curve->add_option("--from", cfrom)->capture_default_str();
  curve->add_option("--to", cto)->capture_default_str();
  curve->add_option("--step", cstep)->capture_default_str();
  curve->add_flag("--knots", knots, "Add every Turan density in range as a row");
  curve->callback([&] { action = [&] { return run_curve(cfrom, cto, cstep, knots, common); }; });

  ConstructArgs ca;
  auto* cons = app.add_subcommand("construct", "Build the randomized construction");
  add_common(cons, common);
  cons->add_option("--k", ca.k)->required();
  cons->add_option("--n", ca.n)->required();
  cons->add_option("--x", ca.x)->required();
  cons->add_option("--rho", ca.rho, "Density parameter of G[Y]");
  cons->add_option("--p", ca.p, "Target edge density; rho is derived from it");
  cons->add_option("--seed", ca.seed)->capture_default_str();
  cons->add_option("--g6", ca.g6, "Write the graph in graph6");
  cons->add_flag("--count", ca.count, "Also count 5-cycles");
  cons->callback([&] { action = [&] { return run_construct(ca, common); }; });

  std::string count_in;
  auto* cnt = app.add_subcommand("count-c5", "Count 5-cycles of graph6 graphs");
  add_common(cnt, common);
  cnt->add_option("--in", count_in, "graph6 file, one graph per line")->required();
  cnt->callback([&] { action = [&] { return run_count(count_in, common); }; });

  IdentityArgs ia;
  auto* ident = app.add_subcommand("identity", "Check the exact quadratic-form identity on graphs");
  add_common(ident, common);
  ident->add_option("--n", ia.n)->capture_default_str();
  ident->add_option("--trials", ia.trials)->capture_default_str();
  ident->add_option("--seed", ia.seed)->capture_default_str();
  ident->add_option("--k", ia.k)->capture_default_str();
  ident->add_flag("--exhaustive", ia.exhaustive, "Every graph of order n instead of random ones");
  ident->callback([&] { action = [&] { return run_identity(ia, common); }; });

  auto* nontight = app.add_subcommand("nontight", "List the non-tight five-vertex graphs");
  add_common(nontight, common);
  nontight->callback([&] { action = [&] { return run_nontight(common); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Result r = action();
    if (common.out.empty())
      out << r.body;
    else
      write_file(common.out, r.body);
    return r.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CertificateFailure& e) {
    err << "certificate failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}

}  // namespace c5min::cli
