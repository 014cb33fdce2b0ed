#include "c5min/flagalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "c5min/graph.hpp"

namespace c5min {

const std::array<RootedFlag, kNumFlags>& flag_basis() {
  static const std::array<RootedFlag, kNumFlags> basis = [] {
    auto flag = [](std::initializer_list<std::pair<int, int>> edges) {
      SmallGraph g(3);
      for (auto [a, b] : edges) g.add_edge(a, b);
      return RootedFlag(g, 0);
    };
    return std::array<RootedFlag, kNumFlags>{
        flag({}),
        flag({{1, 2}}),
        flag({{0, 2}}),
        flag({{0, 2}, {1, 2}}),
        flag({{0, 1}, {0, 2}}),
        flag({{0, 1}, {0, 2}, {1, 2}}),
    };
  }();
  return basis;
}

int product_row(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= kNumFlags) throw std::out_of_range("product_row: flag index out of range");
  // rows before i: 6 + 5 + ... + (6 - i + 1)
  return i * kNumFlags - i * (i - 1) / 2 + (j - i);
}

std::pair<int, int> product_row_pair(int row) {
  for (int i = 0; i < kNumFlags; ++i)
    for (int j = i; j < kNumFlags; ++j)
      if (product_row(i, j) == row) return {i, j};
  throw std::out_of_range("product_row_pair: row out of range");
}

const std::vector<RootedFlag>& rooted_five_flags() {
  static const std::vector<RootedFlag> flags = [] {
    std::set<std::uint32_t> codes;
    for (const SmallGraph& g : enumerate_classes(5))
      for (int r = 0; r < 5; ++r) codes.insert(rooted_canonical_code(RootedFlag(g, r)).code);
    std::vector<RootedFlag> out;
    for (std::uint32_t c : codes) out.emplace_back(SmallGraph(5, c), 0);
    return out;
  }();
  return flags;
}

namespace {

// The 6 ordered splits of {1,2,3,4} into two 2-sets.
constexpr std::array<std::array<int, 4>, 6> kSplits{{
    {1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3}, {2, 3, 1, 4}, {2, 4, 1, 3}, {3, 4, 1, 2},
}};

}  // namespace

std::map<CanonicalCode, BigRational> flag_product(const RootedFlag& f1, const RootedFlag& f2) {
  if (f1.graph.order() != 3 || f2.graph.order() != 3)
    throw std::invalid_argument("flag_product: both flags must have 3 vertices");
  const CanonicalCode c1 = rooted_canonical_code(f1);
  const CanonicalCode c2 = rooted_canonical_code(f2);
  std::map<CanonicalCode, BigRational> out;
  for (const RootedFlag& f : rooted_five_flags()) {
    int hits = 0;
    for (const auto& s : kSplits) {
      const std::array<int, 3> first{0, s[0], s[1]};
      const std::array<int, 3> second{0, s[2], s[3]};
      if (rooted_canonical_code(RootedFlag(f.graph.induced(first), 0)) == c1 &&
          rooted_canonical_code(RootedFlag(f.graph.induced(second), 0)) == c2)
        ++hits;
    }
    if (hits > 0) out.emplace(rooted_canonical_code(f), BigRational(hits, 6));
  }
  for (auto& [code, p] : out) p.canonicalize();
  return out;
}

std::pair<SmallGraph, BigRational> unlabel(const RootedFlag& f) {
  const CanonicalCode target = rooted_canonical_code(f);
  const int n = f.graph.order();
  int matches = 0;
  for (int v = 0; v < n; ++v)
    if (rooted_canonical_code(RootedFlag(f.graph, v)) == target) ++matches;
  BigRational q(matches, n);
  q.canonicalize();
  return {canonical_form(f.graph), q};
}

std::int64_t CoeffTable::scaled30(int row, int column) const {
  const BigRational v = values[static_cast<std::size_t>(row)][static_cast<std::size_t>(column)] * 30;
  if (v.get_den() != 1) throw std::logic_error("CoeffTable: 30x entry is not an integer");
  return v.get_num().get_si();
}

const CoeffTable& product_table() {
  static const CoeffTable table = [] {
    CoeffTable t;
    for (auto& row : t.values) row.fill(BigRational(0));
    std::map<CanonicalCode, std::pair<int, BigRational>> unlabelled;
    for (const RootedFlag& f : rooted_five_flags()) {
      auto [g, q] = unlabel(f);
      unlabelled.emplace(rooted_canonical_code(f), std::make_pair(class_index(g), q));
    }
    const auto& basis = flag_basis();
    for (int i = 0; i < kNumFlags; ++i)
      for (int j = i; j < kNumFlags; ++j) {
        auto& row = t.values[static_cast<std::size_t>(product_row(i, j))];
        for (const auto& [code, p] : flag_product(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)])) {
          const auto& [column, q] = unlabelled.at(code);
          row[static_cast<std::size_t>(column)] += p * q;
        }
      }
    return t;
  }();
  return table;
}

std::vector<std::int64_t> cF_opt_vector() {
  std::vector<std::int64_t> out;
  for (const SmallGraph& g : enumerate_classes(5)) out.push_back(c5_in_five_vertex_mask(g.mask()));
  return out;
}

std::vector<BigRational> pK2_vector() {
  std::vector<BigRational> out;
  for (const SmallGraph& g : enumerate_classes(5)) {
    BigRational q(g.num_edges(), 10);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

// ---------------------------------------------------------------- paper data

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("C5MIN_DATA"); env != nullptr && *env != '\0') return env;
  return C5MIN_DATA_DIR;
}

PaperData load_paper_data(const std::filesystem::path& csv) {
  std::ifstream in(csv);
  if (!in) throw std::runtime_error("cannot open " + csv.string());
  std::vector<std::vector<std::int64_t>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::int64_t> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw std::runtime_error(csv.string() + ":" + std::to_string(line_no) + ": not an integer: '" + cell + "'");
      }
    }
    if (row.size() != kNumFiveClasses)
      throw std::runtime_error(csv.string() + ":" + std::to_string(line_no) + ": expected 34 columns, got " +
                               std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.size() != 2 + kNumProductRows)
    throw std::runtime_error(csv.string() + ": expected 23 data rows, got " + std::to_string(rows.size()));
  PaperData d;
  d.copt = rows[0];
  d.pk2x10 = rows[1];
  d.table30.assign(rows.begin() + 2, rows.end());
  return d;
}

// ---------------------------------------------------------------- alignment

std::vector<std::vector<std::int64_t>> computed_columns() {
  const auto copt = cF_opt_vector();
  const auto pk2 = pK2_vector();
  const CoeffTable& t = product_table();
  std::vector<std::vector<std::int64_t>> cols(kNumFiveClasses);
  for (int c = 0; c < kNumFiveClasses; ++c) {
    auto& col = cols[static_cast<std::size_t>(c)];
    col.push_back(copt[static_cast<std::size_t>(c)]);
    col.push_back(BigRational(pk2[static_cast<std::size_t>(c)] * 10).get_num().get_si());
    for (int r = 0; r < kNumProductRows; ++r) col.push_back(t.scaled30(r, c));
  }
  return cols;
}

std::vector<std::vector<std::int64_t>> paper_columns(const PaperData& paper) {
  std::vector<std::vector<std::int64_t>> cols(paper.copt.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    cols[c].push_back(paper.copt[c]);
    cols[c].push_back(paper.pk2x10[c]);
    for (const auto& row : paper.table30) cols[c].push_back(row[c]);
  }
  return cols;
}

Alignment align_columns(const std::vector<std::vector<std::int64_t>>& computed,
                        const std::vector<std::vector<std::int64_t>>& paper) {
  if (computed.size() != paper.size())
    throw CertificateDataMismatch("alignment: column counts differ", -1, -1);
  std::map<std::vector<std::int64_t>, std::vector<int>> by_value;
  for (std::size_t c = 0; c < paper.size(); ++c) by_value[paper[c]].push_back(static_cast<int>(c));

  for (const auto& col : computed) {
    auto it = by_value.find(col);
    if (it != by_value.end() && it->second.size() > 1) {
      std::string names;
      for (int c : it->second) names += (names.empty() ? "" : ", ") + std::to_string(c + 1);
      throw AlignmentAmbiguity("alignment: paper columns " + names + " are identical", it->second);
    }
  }

  Alignment a;
  a.perm.assign(computed.size(), -1);
  std::vector<char> taken(paper.size(), 0);
  for (std::size_t c = 0; c < computed.size(); ++c) {
    auto it = by_value.find(computed[c]);
    if (it != by_value.end() && !taken[static_cast<std::size_t>(it->second.front())]) {
      a.perm[c] = it->second.front();
      taken[static_cast<std::size_t>(it->second.front())] = 1;
    }
  }
  for (std::size_t c = 0; c < computed.size(); ++c) {
    if (a.perm[c] >= 0) continue;
    // Report against the closest unclaimed paper column.
    int best = -1;
    std::size_t best_diff = SIZE_MAX;
    for (std::size_t p = 0; p < paper.size(); ++p) {
      if (taken[p]) continue;
      std::size_t diff = 0;
      for (std::size_t r = 0; r < paper[p].size() && r < computed[c].size(); ++r) diff += paper[p][r] != computed[c][r];
      if (diff < best_diff) {
        best_diff = diff;
        best = static_cast<int>(p);
      }
    }
    int row = -1;
    std::string detail;
    if (best >= 0) {
      const auto& pc = paper[static_cast<std::size_t>(best)];
      for (std::size_t r = 0; r < pc.size(); ++r)
        if (pc[r] != computed[c][r]) {
          row = static_cast<int>(r);
          detail = ": paper has " + std::to_string(pc[r]) + ", computed " + std::to_string(computed[c][r]);
          break;
        }
    }
    throw CertificateDataMismatch("alignment: computed class " + std::to_string(c) + " matches no paper column; closest is column " +
                                      std::to_string(best + 1) + ", first difference in data row " + std::to_string(row + 1) +
                                      detail,
                                  row, best);
  }
  return a;
}

Alignment align_to_paper(const PaperData& paper) { return align_columns(computed_columns(), paper_columns(paper)); }

}  // namespace c5min
