#include "c5min/smallgraph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <numeric>
#include <set>

namespace c5min {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxSmallOrder) throw SizeError("SmallGraph: order " + std::to_string(n) + " exceeds 8");
}

std::uint32_t full_mask(int n) {
  const int pc = pair_count(n);
  return pc == 32 ? ~0u : ((1u << pc) - 1u);
}

// For each permutation of {0..n-1}: where each pair bit goes.
struct PermTable {
  int n = 0;
  std::vector<std::array<std::uint8_t, kMaxSmallOrder>> perms;
  std::vector<std::array<std::uint8_t, 28>> pair_map;
};

const PermTable& perm_table(int n) {
  static std::array<PermTable, kMaxSmallOrder + 1> tables;
  static std::array<std::once_flag, kMaxSmallOrder + 1> once;
  std::call_once(once[static_cast<std::size_t>(n)], [n] {
    PermTable& t = tables[static_cast<std::size_t>(n)];
    t.n = n;
    std::array<std::uint8_t, kMaxSmallOrder> p{};
    std::iota(p.begin(), p.begin() + n, 0);
    do {
      t.perms.push_back(p);
      std::array<std::uint8_t, 28> pm{};
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          int a = p[static_cast<std::size_t>(i)], b = p[static_cast<std::size_t>(j)];
          if (a > b) std::swap(a, b);
          pm[static_cast<std::size_t>(pair_index(n, i, j))] = static_cast<std::uint8_t>(pair_index(n, a, b));
        }
      t.pair_map.push_back(pm);
    } while (std::next_permutation(p.begin(), p.begin() + n));
  });
  return tables[static_cast<std::size_t>(n)];
}

std::uint32_t apply_pair_map(std::uint32_t mask, const std::array<std::uint8_t, 28>& pm) {
  std::uint32_t out = 0;
  while (mask) {
    const int b = std::countr_zero(mask);
    mask &= mask - 1;
    out |= 1u << pm[static_cast<std::size_t>(b)];
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- SmallGraph

SmallGraph::SmallGraph(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  check_order(n);
  if ((mask & ~full_mask(n)) != 0) throw std::invalid_argument("SmallGraph: mask has bits beyond C(n,2)");
}

SmallGraph SmallGraph::complete(int n) { return SmallGraph(n, full_mask(n)); }

SmallGraph SmallGraph::cycle(int n) {
  SmallGraph g(n);
  if (n >= 3)
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SmallGraph SmallGraph::path(int n) {
  SmallGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SmallGraph SmallGraph::star(int leaves) {
  SmallGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

SmallGraph SmallGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  SmallGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

int SmallGraph::num_edges() const { return std::popcount(mask_); }

int SmallGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && has_edge(u, v)) ++d;
  return d;
}

bool SmallGraph::has_edge(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return (mask_ >> pair_index(n_, i, j)) & 1u;
}

void SmallGraph::add_edge(int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) throw std::invalid_argument("SmallGraph: bad edge");
  if (i > j) std::swap(i, j);
  mask_ |= 1u << pair_index(n_, i, j);
}

void SmallGraph::remove_edge(int i, int j) {
  if (i == j) return;
  if (i > j) std::swap(i, j);
  mask_ &= ~(1u << pair_index(n_, i, j));
}

SmallGraph SmallGraph::permuted(std::span<const int> perm) const {
  SmallGraph out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (has_edge(i, j)) out.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  return out;
}

SmallGraph SmallGraph::induced(std::span<const int> vertices) const {
  const int m = static_cast<int>(vertices.size());
  SmallGraph out(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (has_edge(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)])) out.add_edge(a, b);
  return out;
}

RootedFlag::RootedFlag(SmallGraph g, int r) : graph(g), root(r) {
  if (r < 0 || r >= g.order()) throw std::invalid_argument("RootedFlag: root index out of range");
}

// ---------------------------------------------------------------- canonical codes

CanonicalCode canonical_code(const SmallGraph& g) {
  const PermTable& t = perm_table(g.order());
  std::uint32_t best = g.mask();
  for (const auto& pm : t.pair_map) best = std::min(best, apply_pair_map(g.mask(), pm));
  return {g.order(), false, best};
}

CanonicalCode rooted_canonical_code(const RootedFlag& f) {
  const int n = f.graph.order();
  if (f.root < 0 || f.root >= n) throw std::invalid_argument("rooted_canonical_code: invalid root");
  const PermTable& t = perm_table(n);
  std::uint32_t best = ~0u;
  for (std::size_t i = 0; i < t.perms.size(); ++i) {
    if (t.perms[i][static_cast<std::size_t>(f.root)] != 0) continue;
    best = std::min(best, apply_pair_map(f.graph.mask(), t.pair_map[i]));
  }
  return {n, true, best};
}

SmallGraph canonical_form(const SmallGraph& g) { return SmallGraph(g.order(), canonical_code(g).code); }

RootedFlag canonical_form(const RootedFlag& f) {
  return RootedFlag(SmallGraph(f.graph.order(), rooted_canonical_code(f).code), 0);
}

// ---------------------------------------------------------------- enumeration

namespace {

std::vector<SmallGraph> build_classes(int n) {
  if (n <= 1) return {SmallGraph(n)};
  // Extend every class on n-1 vertices by a new vertex with every neighbourhood.
  const auto& smaller = enumerate_classes(n - 1);
  std::set<std::uint32_t> codes;
  for (const SmallGraph& h : smaller) {
    SmallGraph base(n);
    for (int i = 0; i < n - 1; ++i)
      for (int j = i + 1; j < n - 1; ++j)
        if (h.has_edge(i, j)) base.add_edge(i, j);
    for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
      SmallGraph g = base;
      for (int v = 0; v < n - 1; ++v)
        if ((nb >> v) & 1u) g.add_edge(v, n - 1);
      codes.insert(canonical_code(g).code);
    }
  }
  std::vector<SmallGraph> out;
  out.reserve(codes.size());
  for (std::uint32_t c : codes) out.emplace_back(n, c);
  std::sort(out.begin(), out.end(), [](const SmallGraph& a, const SmallGraph& b) {
    if (a.num_edges() != b.num_edges()) return a.num_edges() < b.num_edges();
    return a.mask() < b.mask();
  });
  return out;
}

}  // namespace

const std::vector<SmallGraph>& enumerate_classes(int n) {
  if (n < 0 || n > 7) throw SizeError("enumerate_classes: n = " + std::to_string(n) + " exceeds 7");
  static std::array<std::vector<SmallGraph>, 8> cache;
  static std::array<std::once_flag, 8> once;
  std::call_once(once[static_cast<std::size_t>(n)], [n] { cache[static_cast<std::size_t>(n)] = build_classes(n); });
  return cache[static_cast<std::size_t>(n)];
}

const std::vector<int>& class_lookup(int n) {
  if (n < 0 || n > 6) throw SizeError("class_lookup: n = " + std::to_string(n) + " exceeds 6");
  static std::array<std::vector<int>, 7> cache;
  static std::array<std::once_flag, 7> once;
  std::call_once(once[static_cast<std::size_t>(n)], [n] {
    const auto& classes = enumerate_classes(n);
    std::vector<int> table(std::size_t{1} << pair_count(n), -1);
    // Walk each class's orbit instead of canonicalizing every mask.
    const PermTable& t = perm_table(n);
    for (std::size_t idx = 0; idx < classes.size(); ++idx)
      for (const auto& pm : t.pair_map) table[apply_pair_map(classes[idx].mask(), pm)] = static_cast<int>(idx);
    cache[static_cast<std::size_t>(n)] = std::move(table);
  });
  return cache[static_cast<std::size_t>(n)];
}

int class_index(const SmallGraph& g) {
  if (g.order() <= 6) return class_lookup(g.order())[g.mask()];
  const auto& classes = enumerate_classes(g.order());
  const SmallGraph c = canonical_form(g);
  auto it = std::lower_bound(classes.begin(), classes.end(), c, [](const SmallGraph& a, const SmallGraph& b) {
    if (a.num_edges() != b.num_edges()) return a.num_edges() < b.num_edges();
    return a.mask() < b.mask();
  });
  return static_cast<int>(it - classes.begin());
}

std::int64_t automorphism_count(const SmallGraph& g) {
  const PermTable& t = perm_table(g.order());
  std::int64_t count = 0;
  for (const auto& pm : t.pair_map)
    if (apply_pair_map(g.mask(), pm) == g.mask()) ++count;
  return count;
}

int c5_in_five_vertex_mask(std::uint32_t mask) {
  static const std::array<int, 1024> table = [] {
    std::array<int, 1024> out{};
    // Cyclic orders starting at vertex 0, each undirected cycle seen twice.
    std::array<int, 4> rest{1, 2, 3, 4};
    std::vector<std::uint32_t> cycles;
    do {
      const std::array<int, 5> cyc{0, rest[0], rest[1], rest[2], rest[3]};
      std::uint32_t m = 0;
      for (int i = 0; i < 5; ++i) {
        int a = cyc[static_cast<std::size_t>(i)], b = cyc[static_cast<std::size_t>((i + 1) % 5)];
        if (a > b) std::swap(a, b);
        m |= 1u << pair_index(5, a, b);
      }
      cycles.push_back(m);
    } while (std::next_permutation(rest.begin(), rest.end()));
    for (std::uint32_t mask = 0; mask < 1024; ++mask) {
      int c = 0;
      for (std::uint32_t cm : cycles)
        if ((mask & cm) == cm) ++c;
      out[mask] = c / 2;
    }
    return out;
  }();
  return table[mask & 1023u];
}

}  // namespace c5min
