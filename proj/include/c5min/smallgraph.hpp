#ifndef C5MIN_SMALLGRAPH_HPP
#define C5MIN_SMALLGRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace c5min {

/// Raised when a graph is larger than an operation supports.
class SizeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kMaxSmallOrder = 8;

/// Bit position of the unordered pair {i, j} (i < j) in lexicographic pair order.
constexpr int pair_index(int n, int i, int j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Undirected loop-free graph on at most 8 vertices, stored as a bitmask
/// over the C(n,2) vertex pairs in lexicographic order.
class SmallGraph {
 public:
  SmallGraph() = default;
  /// Throws SizeError for n > 8 and std::invalid_argument if mask has bits beyond C(n,2).
  explicit SmallGraph(int n, std::uint32_t mask = 0);

  static SmallGraph complete(int n);
  static SmallGraph cycle(int n);
  static SmallGraph path(int n);
  static SmallGraph star(int leaves);
  static SmallGraph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int num_edges() const;
  int degree(int v) const;

  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  /// The graph with vertex v renamed to perm[v].
  SmallGraph permuted(std::span<const int> perm) const;
  /// The graph induced on `vertices`, relabelled 0..|vertices|-1 in the given order.
  SmallGraph induced(std::span<const int> vertices) const;

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

/// A SmallGraph with one distinguished vertex.
struct RootedFlag {
  SmallGraph graph;
  int root = 0;

  /// Throws std::invalid_argument when root is out of range.
  RootedFlag(SmallGraph g, int r);
};

/// Isomorphism invariant of a graph or flag: the least edge mask over all
/// relabellings (for flags, over relabellings sending the root to vertex 0).
struct CanonicalCode {
  int n = 0;
  bool rooted = false;
  std::uint32_t code = 0;

  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const SmallGraph& g);
CanonicalCode rooted_canonical_code(const RootedFlag& f);
/// The canonical representative itself (edge mask = code).
SmallGraph canonical_form(const SmallGraph& g);
/// The canonical representative with the root at vertex 0.
RootedFlag canonical_form(const RootedFlag& f);

/// One representative per isomorphism class on n <= 7 vertices, each in
/// canonical form, sorted by (edge count, canonical code). Cached.
const std::vector<SmallGraph>& enumerate_classes(int n);

/// Index into enumerate_classes(n) for every raw edge mask on n <= 6 vertices.
const std::vector<int>& class_lookup(int n);

/// Index of g's class within enumerate_classes(g.order()).
int class_index(const SmallGraph& g);

/// Number of automorphisms (brute force).
std::int64_t automorphism_count(const SmallGraph& g);

/// Number of (not necessarily induced) 5-cycles in a graph on 5 vertices,
/// read from a table over all 1024 masks.
int c5_in_five_vertex_mask(std::uint32_t mask);

}  // namespace c5min

#endif  // C5MIN_SMALLGRAPH_HPP
