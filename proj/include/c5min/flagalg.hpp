#ifndef C5MIN_FLAGALG_HPP
#define C5MIN_FLAGALG_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "c5min/polyk.hpp"
#include "c5min/smallgraph.hpp"

namespace c5min {

inline constexpr int kNumFlags = 6;
inline constexpr int kNumProductRows = 21;
inline constexpr int kNumFiveClasses = 34;

/// The six rooted 3-vertex flags X1..X6 (index 0..5), root at vertex 0:
/// empty, edge between the two unrooted vertices, one root edge,
/// path with the root at an end, cherry centred at the root, triangle.
const std::array<RootedFlag, kNumFlags>& flag_basis();

/// Row of the unordered flag pair (i, j), 0-based with i <= j, in the
/// order (0,0), (0,1), ..., (0,5), (1,1), ..., (5,5).
int product_row(int i, int j);
std::pair<int, int> product_row_pair(int row);

/// Every rooted 5-vertex flag class, in canonical form (root at vertex 0).
const std::vector<RootedFlag>& rooted_five_flags();

/// p(F1, F2; F) for every rooted 5-vertex flag class F with a nonzero value,
/// keyed by the rooted canonical code of F. Both arguments must have 3 vertices.
std::map<CanonicalCode, BigRational> flag_product(const RootedFlag& f1, const RootedFlag& f2);

/// Forgets the root: returns the unrooted canonical graph and the
/// probability that a uniformly random root recreates the flag.
std::pair<SmallGraph, BigRational> unlabel(const RootedFlag& f);

/// Coefficients of the unlabelled flag products over the 34 five-vertex
/// graphs, columns in enumerate_classes(5) order.
struct CoeffTable {
  std::array<std::array<BigRational, kNumFiveClasses>, kNumProductRows> values;

  const BigRational& at(int i, int j, int column) const {
    return values[static_cast<std::size_t>(product_row(std::min(i, j), std::max(i, j)))][static_cast<std::size_t>(column)];
  }
  /// 30 * value as an integer; throws std::logic_error if not integral.
  std::int64_t scaled30(int row, int column) const;
};

const CoeffTable& product_table();

/// Number of 5-cycles in each 5-vertex class.
std::vector<std::int64_t> cF_opt_vector();
/// Edge density p(K2, F) = |E(F)| / 10 of each 5-vertex class.
std::vector<BigRational> pK2_vector();

// ---------------------------------------------------------------- alignment

/// Integer data as published: c_F^OPT, 10 p(K2,F) and 30x the 21 product
/// rows, 34 columns each in the published column order.
struct PaperData {
  std::vector<std::int64_t> copt;
  std::vector<std::int64_t> pk2x10;
  std::vector<std::vector<std::int64_t>> table30;
};

/// Reads the 23-row CSV (copt; pk2x10; 21 product rows).
PaperData load_paper_data(const std::filesystem::path& csv);
/// $C5MIN_DATA if set, otherwise the directory compiled into the build.
std::filesystem::path data_dir();

class CertificateDataMismatch : public std::runtime_error {
 public:
  CertificateDataMismatch(const std::string& what, int row, int column)
      : std::runtime_error(what), row_(row), column_(column) {}
  /// Data row (0 = copt, 1 = pk2x10, 2.. = product rows) and paper column, 0-based.
  int row() const { return row_; }
  int column() const { return column_; }

 private:
  int row_;
  int column_;
};

class AlignmentAmbiguity : public std::runtime_error {
 public:
  AlignmentAmbiguity(const std::string& what, std::vector<int> columns)
      : std::runtime_error(what), columns_(std::move(columns)) {}
  const std::vector<int>& columns() const { return columns_; }

 private:
  std::vector<int> columns_;
};

/// perm[internal column] = paper column (0-based).
struct Alignment {
  std::vector<int> perm;
};

/// Integer columns (23 entries each) of computed data in internal order.
std::vector<std::vector<std::int64_t>> computed_columns();
std::vector<std::vector<std::int64_t>> paper_columns(const PaperData& paper);

/// Matches computed columns against paper columns exactly.
Alignment align_columns(const std::vector<std::vector<std::int64_t>>& computed,
                        const std::vector<std::vector<std::int64_t>>& paper);
Alignment align_to_paper(const PaperData& paper);

}  // namespace c5min

#endif  // C5MIN_FLAGALG_HPP
