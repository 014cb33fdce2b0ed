#ifndef C5MIN_PARALLEL_HPP
#define C5MIN_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace c5min {

/// Runs body(i) for every i in [0, count). Bodies must be independent.
using ParallelFor = std::function<void(std::size_t count, const std::function<void(std::size_t)>& body)>;

ParallelFor serial_for();
/// Static-chunked worker pool of `jobs` threads; jobs <= 1 runs inline.
ParallelFor threaded_for(unsigned jobs);

}  // namespace c5min

#endif  // C5MIN_PARALLEL_HPP
