#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "c5min/flagalg.hpp"
#include "c5min/graph.hpp"

using namespace c5min;

namespace {

const std::array<std::array<int, 4>, 6> kSplits{{
    {1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3}, {2, 3, 1, 4}, {2, 4, 1, 3}, {3, 4, 1, 2},
}};

// 30 * coefficient of F in the unlabelled product of X_i and X_j, counted by
// classifying triples directly: each (root, ordered split) of F is one of 30 configurations.
int configurations(const SmallGraph& f, int i, int j) {
  const Graph g = Graph::from_small(f);
  int hits = 0;
  for (int r = 0; r < 5; ++r) {
    std::array<int, 4> others{};
    for (int v = 0, c = 0; v < 5; ++v)
      if (v != r) others[static_cast<std::size_t>(c++)] = v;
    for (const auto& s : kSplits) {
      const int a = others[static_cast<std::size_t>(s[0] - 1)], b = others[static_cast<std::size_t>(s[1] - 1)];
      const int c = others[static_cast<std::size_t>(s[2] - 1)], d = others[static_cast<std::size_t>(s[3] - 1)];
      const int t1 = rooted_flag_index(g, r, a, b) - 1, t2 = rooted_flag_index(g, r, c, d) - 1;
      if (t1 == i && t2 == j) ++hits;
    }
  }
  return hits;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

std::string csv_of(const PaperData& d) {
  std::string s = "# test copy\n";
  auto line = [&](const std::vector<std::int64_t>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
    s += "\n";
  };
  line(d.copt);
  line(d.pk2x10);
  for (const auto& r : d.table30) line(r);
  return s;
}

}  // namespace

TEST_CASE("flag basis and product row indexing") {
  std::set<CanonicalCode> codes;
  for (const auto& f : flag_basis()) codes.insert(rooted_canonical_code(f));
  CHECK(codes.size() == 6);
  // X_i has the flag type i+1 reported by rooted_flag_index.
  for (int i = 0; i < kNumFlags; ++i)
    CHECK(rooted_flag_index(Graph::from_small(flag_basis()[static_cast<std::size_t>(i)].graph), 0, 1, 2) == i + 1);
  std::set<int> rows;
  for (int i = 0; i < kNumFlags; ++i)
    for (int j = i; j < kNumFlags; ++j) {
      rows.insert(product_row(i, j));
      CHECK(product_row(j, i) == product_row(i, j));
      CHECK(product_row_pair(product_row(i, j)) == std::make_pair(i, j));
    }
  CHECK(rows.size() == 21);
  CHECK(*rows.rbegin() == 20);
  CHECK(product_row(0, 5) == 5);
  CHECK(product_row(1, 1) == 6);
  CHECK(rooted_five_flags().size() == 90);
}

TEST_CASE("product table equals direct configuration counting") {
  const CoeffTable& t = product_table();
  const auto& classes = enumerate_classes(5);
  for (int i = 0; i < kNumFlags; ++i)
    for (int j = i; j < kNumFlags; ++j)
      for (int f = 0; f < kNumFiveClasses; ++f) {
        const SmallGraph& g = classes[static_cast<std::size_t>(f)];
        CHECK(t.at(i, j, f) == ratio(configurations(g, i, j), 30));
        CHECK(configurations(g, i, j) == configurations(g, j, i));
      }
}

TEST_CASE("every configuration has some type pair") {
  const CoeffTable& t = product_table();
  for (int f = 0; f < kNumFiveClasses; ++f) {
    BigRational s = 0;
    for (int i = 0; i < kNumFlags; ++i)
      for (int j = i; j < kNumFlags; ++j) s += (i == j ? 1 : 2) * t.at(i, j, f);
    CHECK(s == 1);
  }
}

TEST_CASE("flag products and unlabelling") {
  // X1 * X1: both triples empty; edges between the two pairs are free.
  const auto prod = flag_product(flag_basis()[0], flag_basis()[0]);
  const auto empty5 = rooted_canonical_code(RootedFlag(SmallGraph(5), 0));
  REQUIRE(prod.count(empty5) == 1);
  CHECK(prod.at(empty5) == 1);
  for (const auto& [code, coeff] : prod) {
    CHECK(sgn(coeff) > 0);
    CHECK(coeff <= 1);
  }
  CHECK(prod.count(rooted_canonical_code(RootedFlag(SmallGraph::complete(5), 0))) == 0);
  const auto [g, q] = unlabel(RootedFlag(SmallGraph::star(4), 0));
  CHECK(g.num_edges() == 4);
  CHECK(q == BigRational(1, 5));
  CHECK_THROWS_AS(flag_product(RootedFlag(SmallGraph(4), 0), flag_basis()[0]), std::invalid_argument);
}

TEST_CASE("objective and edge-density vectors") {
  const auto copt = cF_opt_vector();
  const auto pk2 = pK2_vector();
  const auto& classes = enumerate_classes(5);
  // Weighting each class by its labelled copies counts 12 cycles in each of 2^5 masks.
  std::int64_t total = 0;
  for (int f = 0; f < kNumFiveClasses; ++f)
    total += copt[static_cast<std::size_t>(f)] * (120 / automorphism_count(classes[static_cast<std::size_t>(f)]));
  CHECK(total == 12 * 32);
  CHECK(copt.back() == 12);
  CHECK(pk2.back() == 1);
  CHECK(pk2.front() == 0);
}

TEST_CASE("computed data aligns with the published table") {
  const PaperData paper = load_paper_data(data_dir() / "appendix_a.csv");
  CHECK(paper.table30.size() == 21);
  CHECK(paper.copt.back() == 12);
  const Alignment a = align_to_paper(paper);
  std::set<int> image(a.perm.begin(), a.perm.end());
  CHECK(image.size() == 34);
  const auto computed = computed_columns();
  const auto published = paper_columns(paper);
  for (std::size_t c = 0; c < computed.size(); ++c) CHECK(computed[c] == published[static_cast<std::size_t>(a.perm[c])]);
}

TEST_CASE("alignment reports mismatches and ambiguities") {
  const PaperData paper = load_paper_data(data_dir() / "appendix_a.csv");
  PaperData bad = paper;
  bad.table30[4][7] += 1;
  try {
    align_to_paper(bad);
    FAIL("expected a mismatch");
  } catch (const CertificateDataMismatch& e) {
    CHECK(e.column() == 7);
    CHECK(e.row() == 6);  // data row 0 is copt, 1 is pk2x10
  }
  PaperData dup = paper;
  for (auto* row : {&dup.copt, &dup.pk2x10}) (*row)[1] = (*row)[0];
  for (auto& row : dup.table30) row[1] = row[0];
  try {
    align_to_paper(dup);
    FAIL("expected an ambiguity");
  } catch (const AlignmentAmbiguity& e) {
    CHECK(e.columns() == std::vector<int>{0, 1});
  }
}

TEST_CASE("loading the published table") {
  const PaperData paper = load_paper_data(data_dir() / "appendix_a.csv");
  const auto copy = write_temp("c5min_table_copy.csv", csv_of(paper));
  const PaperData again = load_paper_data(copy);
  CHECK(again.table30 == paper.table30);
  CHECK_THROWS(load_paper_data(write_temp("c5min_table_short.csv", "1,2,3\n")));
  CHECK_THROWS(load_paper_data(write_temp("c5min_table_text.csv", "a,b\n")));
  CHECK_THROWS(load_paper_data("/nonexistent/table.csv"));
}

TEST_CASE("the data directory can be overridden from the environment") {
  const auto dir = std::filesystem::temp_directory_path() / "c5min_data_override";
  std::filesystem::create_directories(dir);
  setenv("C5MIN_DATA", dir.c_str(), 1);
  CHECK(data_dir() == dir);
  unsetenv("C5MIN_DATA");
  CHECK(data_dir() == std::filesystem::path(C5MIN_DATA_DIR));
}
