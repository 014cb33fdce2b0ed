#ifndef C5MIN_EXTREMAL_HPP
#define C5MIN_EXTREMAL_HPP

#include <cstdint>
#include <vector>

#include "c5min/graph.hpp"
#include "c5min/polyk.hpp"

namespace c5min {

/// Sizes of the parts of a complete multipartite graph.
using PartSizes = std::vector<std::int64_t>;

/// k parts summing to n; the first n mod k parts get ceil(n/k).
/// Throws std::invalid_argument unless 1 <= k <= n.
PartSizes turan_part_sizes(std::int64_t k, std::int64_t n);
Graph turan_graph(int k, int n);
/// Vertices are numbered part by part. Throws on empty or non-positive sizes.
Graph complete_multipartite(const PartSizes& sizes);

/// Exact number of 5-cycles in the complete multipartite graph with these parts.
/// Uses pattern enumeration up to 12 parts and the grouped formula above.
BigInt c5_multipartite_closed(const PartSizes& sizes);
/// The two evaluation routes, exposed so they can be compared.
BigInt c5_multipartite_enumerated(const PartSizes& sizes);
BigInt c5_multipartite_grouped(const PartSizes& sizes);

struct TuranDensityReport {
  int k = 0;
  std::int64_t n = 0;
  BigInt count;
  BigRational density;  // count / n^5
  BigRational lambda;
  BigRational gap;      // density - lambda
};

/// Throws std::domain_error for k < 3.
TuranDensityReport turan_density_report(int k, std::int64_t n);

}  // namespace c5min

#endif  // C5MIN_EXTREMAL_HPP
