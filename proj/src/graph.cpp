#include "c5min/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace c5min {

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
  if (n < 0) throw std::invalid_argument("Graph: negative order");
  bits_.assign(words_ * static_cast<std::size_t>(n), 0);
}

Graph Graph::from_small(const SmallGraph& g) {
  Graph out(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.has_edge(i, j)) out.add_edge(i, j);
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: bad edge");
  row_mut(u)[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  row_mut(v)[static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  if (u == v) return;
  row_mut(u)[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  row_mut(v)[static_cast<std::size_t>(u) >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const {
  int d = 0;
  const std::uint64_t* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::int64_t Graph::num_edges() const {
  std::int64_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  const std::uint64_t* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

SmallGraph Graph::induced_small(std::span<const int> vertices) const {
  const int m = static_cast<int>(vertices.size());
  SmallGraph out(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (has_edge(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)])) out.add_edge(a, b);
  return out;
}

// ---------------------------------------------------------------- graph6

namespace {

constexpr int kG6Bias = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kG6Bias || c > 126) throw ParseError("graph6: byte outside 63..126", i);
  }
  auto val = [&](std::size_t i) { return static_cast<std::int64_t>(static_cast<unsigned char>(text[i])) - kG6Bias; };
  std::int64_t n = 0;
  std::size_t pos = 0;
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else if (text.size() >= 2 && val(1) == 63) {
    if (text.size() < 8) throw ParseError("graph6: truncated 8-byte header", text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated 4-byte header", text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | val(i);
    pos = 4;
  }
  if (n > (std::int64_t{1} << 24)) throw ParseError("graph6: order too large", 0);
  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for n=" + std::to_string(n) + ", got " +
                         std::to_string(text.size()),
                     std::min(text.size(), expected));
  }
  Graph g(static_cast<int>(n));
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      if ((val(byte) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = text.size() - 1;
    if ((val(last) & ((1 << (6 - k % 6)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", last);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kG6Bias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kG6Bias));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kG6Bias));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Bias));
  return out;
}

std::string write_graph6(const SmallGraph& g) { return write_graph6(Graph::from_small(g)); }

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  std::size_t line_offset = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("line ") + std::to_string(line_offset + 1) + ": " + e.message(), start + e.offset());
      }
    }
    ++line_offset;
    start = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------- counting

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

// Calls fn(mask) for the 5-vertex induced mask of every 5-subset of g.
template <typename Fn>
void for_each_five_subset(const Graph& g, Fn&& fn) {
  const int n = g.order();
  auto e = [&](int a, int b) -> std::uint32_t { return g.has_edge(a, b) ? 1u : 0u; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const std::uint32_t mb = e(a, b);
      for (int c = b + 1; c < n; ++c) {
        const std::uint32_t mc = mb | e(a, c) << 1 | e(b, c) << 4;
        for (int d = c + 1; d < n; ++d) {
          const std::uint32_t md = mc | e(a, d) << 2 | e(b, d) << 5 | e(c, d) << 7;
          for (int f = d + 1; f < n; ++f) fn(md | e(a, f) << 3 | e(b, f) << 6 | e(c, f) << 8 | e(d, f) << 9);
        }
      }
    }
}

// Calls fn(indices) for every m-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int m, Fn&& fn) {
  if (m > n) return;
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(std::span<const int>(idx));
    int i = m - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::int64_t count_induced(const SmallGraph& f, const Graph& g) {
  const int m = f.order();
  if (m > g.order()) return 0;
  if (m == 5) return induced_counts5(g)[static_cast<std::size_t>(class_index(f))];
  std::int64_t count = 0;
  if (m <= 6) {
    const auto& lookup = class_lookup(m);
    const int target = lookup[f.mask()];
    for_each_subset(g.order(), m, [&](std::span<const int> s) {
      if (lookup[g.induced_small(s).mask()] == target) ++count;
    });
  } else {
    const CanonicalCode target = canonical_code(f);
    for_each_subset(g.order(), m, [&](std::span<const int> s) {
      if (canonical_code(g.induced_small(s)) == target) ++count;
    });
  }
  return count;
}

BigRational p_induced(const SmallGraph& f, const Graph& g) {
  if (f.order() > g.order()) return 0;
  return ratio(BigInt(static_cast<long>(count_induced(f, g))), binomial(g.order(), f.order()));
}

std::vector<std::int64_t> induced_counts5(const Graph& g) {
  const auto& lookup = class_lookup(5);
  std::vector<std::int64_t> counts(enumerate_classes(5).size(), 0);
  for_each_five_subset(g, [&](std::uint32_t mask) { ++counts[static_cast<std::size_t>(lookup[mask])]; });
  return counts;
}

std::int64_t nu_copies(const SmallGraph& h, const Graph& g) {
  const int m = h.order();
  if (m > 5) throw SizeError("nu_copies: pattern has more than 5 vertices");
  if (m > g.order()) return 0;
  std::vector<int> image(static_cast<std::size_t>(m), -1);
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  std::int64_t maps = 0;
  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == m) {
      ++maps;
      return;
    }
    for (int v = 0; v < g.order(); ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int prev = 0; prev < depth && ok; ++prev)
        if (h.has_edge(prev, depth) && !g.has_edge(image[static_cast<std::size_t>(prev)], v)) ok = false;
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = 1;
      image[static_cast<std::size_t>(depth)] = v;
      self(self, depth + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  extend(extend, 0);
  return maps / automorphism_count(h);
}

std::int64_t count_c5_naive(const Graph& g) {
  std::int64_t count = 0;
  for_each_five_subset(g, [&](std::uint32_t mask) { count += c5_in_five_vertex_mask(mask); });
  return count;
}

std::int64_t count_c5_algebraic(const Graph& g) {
  const int n = g.order();
  if (n < 5) return 0;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  const std::size_t words = g.words_per_row();

  __int128 trace5 = 0;
  __int128 trace3 = 0;
  __int128 weighted3 = 0;
  std::vector<std::int64_t> a2(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::uint64_t* ri = g.row(i);
    for (int l = 0; l < n; ++l) {
      const std::uint64_t* rl = g.row(l);
      std::int64_t c = 0;
      for (std::size_t w = 0; w < words; ++w) c += std::popcount(ri[w] & rl[w]);
      a2[static_cast<std::size_t>(l)] = c;
    }
    for (int j = 0; j < n; ++j) {
      std::int64_t a3 = 0;
      for (int l : adj[static_cast<std::size_t>(j)]) a3 += a2[static_cast<std::size_t>(l)];
      trace5 += static_cast<__int128>(a2[static_cast<std::size_t>(j)]) * a3;
      if (j == i) {
        trace3 += a3;
        weighted3 += static_cast<__int128>(static_cast<std::int64_t>(adj[static_cast<std::size_t>(i)].size()) - 2) * a3;
      }
    }
  }
  const __int128 ten = trace5 - 5 * trace3 - 5 * weighted3;
  const __int128 result = ten / 10;
  if (result > static_cast<__int128>(INT64_MAX)) throw std::overflow_error("count_c5_algebraic: count exceeds int64");
  return static_cast<std::int64_t>(result);
}

std::int64_t count_c5(const Graph& g) { return g.order() <= 12 ? count_c5_naive(g) : count_c5_algebraic(g); }

int rooted_flag_index(const Graph& g, int r, int u, int v) {
  if (r == u || r == v || u == v) throw std::invalid_argument("rooted_flag_index: vertices must be distinct");
  const int n = g.order();
  if (r < 0 || u < 0 || v < 0 || r >= n || u >= n || v >= n) throw std::invalid_argument("rooted_flag_index: vertex out of range");
  const int root_edges = (g.has_edge(r, u) ? 1 : 0) + (g.has_edge(r, v) ? 1 : 0);
  const bool uv = g.has_edge(u, v);
  switch (root_edges) {
    case 0:
      return uv ? 2 : 1;
    case 1:
      return uv ? 4 : 3;
    default:
      return uv ? 6 : 5;
  }
}

}  // namespace c5min
