#ifndef C5MIN_GRAPH_HPP
#define C5MIN_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <span>
#include <string_view>
#include <vector>

#include "c5min/polyk.hpp"
#include "c5min/smallgraph.hpp"

namespace c5min {

/// Undirected loop-free graph with adjacency rows stored as 64-bit word bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_small(const SmallGraph& g);

  int order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool has_edge(int u, int v) const {
    return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::int64_t num_edges() const;
  std::vector<int> neighbors(int v) const;

  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  /// Induced subgraph on up to 8 vertices, labelled in the given order.
  SmallGraph induced_small(std::span<const int> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  std::uint64_t* row_mut(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// ---------------------------------------------------------------- graph6

/// Malformed graph6 input; `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), message_(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }
  /// The description without the byte position.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// Parses one graph6 string (a trailing newline is tolerated).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);
std::string write_graph6(const SmallGraph& g);
/// Parses every non-empty line of a graph6 stream.
std::vector<Graph> parse_graph6_lines(std::string_view text);

// ---------------------------------------------------------------- counting

/// Number of |F|-subsets of V(G) that induce a copy of F; zero when |F| > |G|.
std::int64_t count_induced(const SmallGraph& f, const Graph& g);
/// count_induced / C(|G|, |F|).
BigRational p_induced(const SmallGraph& f, const Graph& g);

/// Induced counts of every 5-vertex class, indexed like enumerate_classes(5).
std::vector<std::int64_t> induced_counts5(const Graph& g);

/// Number of (not necessarily induced) subgraphs of G isomorphic to H.
std::int64_t nu_copies(const SmallGraph& h, const Graph& g);

/// 5-cycles by enumerating all 5-subsets.
std::int64_t count_c5_naive(const Graph& g);
/// 5-cycles from closed-walk traces:
/// 10 C5 = tr A^5 - 5 tr A^3 - 5 sum_i (d_i - 2) (A^3)_ii.
std::int64_t count_c5_algebraic(const Graph& g);
/// Naive backend for |G| <= 12, algebraic above.
std::int64_t count_c5(const Graph& g);

/// Type 1..6 of the triple {r,u,v} rooted at r, in the flag order
/// (empty, edge uv, one root edge, root-endpoint path, cherry at root, triangle).
int rooted_flag_index(const Graph& g, int r, int u, int v);

BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace c5min

#endif  // C5MIN_GRAPH_HPP
