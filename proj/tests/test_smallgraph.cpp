#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "c5min/smallgraph.hpp"

using namespace c5min;

TEST_CASE("edge bits follow lexicographic pair order") {
  CHECK(pair_index(5, 0, 1) == 0);
  CHECK(pair_index(5, 0, 4) == 3);
  CHECK(pair_index(5, 1, 2) == 4);
  CHECK(pair_index(5, 3, 4) == 9);
  CHECK(pair_count(8) == 28);
  SmallGraph g(4);
  g.add_edge(2, 1);
  CHECK(g.has_edge(1, 2));
  CHECK(g.mask() == (1u << pair_index(4, 1, 2)));
  CHECK_THROWS_AS(SmallGraph(9), SizeError);
  CHECK_THROWS(g.add_edge(1, 1));
}

TEST_CASE("standard graphs") {
  CHECK(SmallGraph::complete(5).num_edges() == 10);
  CHECK(SmallGraph::cycle(5).num_edges() == 5);
  CHECK(SmallGraph::path(4).num_edges() == 3);
  CHECK(SmallGraph::star(3).order() == 4);
  CHECK(SmallGraph::star(3).degree(0) == 3);
}

TEST_CASE("number of isomorphism classes matches the known sequence") {
  const std::vector<std::size_t> known{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_classes(n).size() == known[static_cast<std::size_t>(n)]);
}

TEST_CASE("orbit-stabilizer: labelled graphs are partitioned by class") {
  for (int n = 1; n <= 6; ++n) {
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    std::int64_t total = 0;
    for (const SmallGraph& g : enumerate_classes(n)) total += fact / automorphism_count(g);
    CHECK(total == (std::int64_t{1} << pair_count(n)));
  }
  CHECK(automorphism_count(SmallGraph::complete(5)) == 120);
  CHECK(automorphism_count(SmallGraph::cycle(5)) == 10);
}

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const SmallGraph g(n, static_cast<std::uint32_t>(rng()) & ((1u << pair_count(n)) - 1));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const SmallGraph h = g.permuted(perm);
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(h.num_edges() == g.num_edges());
    if (n <= 7) CHECK(enumerate_classes(n)[static_cast<std::size_t>(class_index(g))] == canonical_form(g));
    // a rooted flag stays equivalent when its root moves with the relabelling
    const int r = static_cast<int>(rng() % static_cast<unsigned>(n));
    const int image = perm[static_cast<std::size_t>(r)];
    CHECK(rooted_canonical_code(RootedFlag(g, r)) == rooted_canonical_code(RootedFlag(h, image)));
  }
}

TEST_CASE("rooted codes separate the six 3-vertex flags") {
  std::set<std::uint32_t> codes;
  for (std::uint32_t m = 0; m < 8; ++m)
    for (int r = 0; r < 3; ++r) codes.insert(rooted_canonical_code(RootedFlag(SmallGraph(3, m), r)).code);
  CHECK(codes.size() == 6);
  CHECK_THROWS_AS(RootedFlag(SmallGraph(3), 3), std::invalid_argument);
}

TEST_CASE("class lookup agrees with canonical codes") {
  for (int n = 1; n <= 6; ++n) {
    const auto& lookup = class_lookup(n);
    const auto& classes = enumerate_classes(n);
    REQUIRE(lookup.size() == (std::size_t{1} << pair_count(n)));
    for (std::uint32_t m = 0; m < lookup.size(); m += 7)
      CHECK(canonical_code(classes[static_cast<std::size_t>(lookup[m])]) == canonical_code(SmallGraph(n, m)));
  }
}

TEST_CASE("five-cycle table") {
  CHECK(c5_in_five_vertex_mask(SmallGraph::complete(5).mask()) == 12);
  CHECK(c5_in_five_vertex_mask(SmallGraph::cycle(5).mask()) == 1);
  CHECK(c5_in_five_vertex_mask(0) == 0);
  // Each of the 12 labelled 5-cycles lies in 2^5 of the 1024 masks.
  int total = 0;
  for (std::uint32_t m = 0; m < 1024; ++m) total += c5_in_five_vertex_mask(m);
  CHECK(total == 12 * 32);
}

TEST_CASE("induced subgraphs keep the requested vertex order") {
  const SmallGraph p = SmallGraph::path(4);  // 0-1-2-3
  const std::array<int, 3> vs{3, 2, 0};
  const SmallGraph h = p.induced(vs);
  CHECK(h.has_edge(0, 1));
  CHECK(!h.has_edge(1, 2));
  CHECK(h.num_edges() == 1);
}
