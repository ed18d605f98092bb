#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "pdm/alternating.hpp"
#include "pdm/graph.hpp"
#include "pdm/matching.hpp"
#include "pdm/pair_solver.hpp"

using namespace pdm;

namespace {

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

struct Rng {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % std::uint64_t(n)); }
};

Graph random_graph(Rng& rng, int max_n, int max_m) {
  int n = 2 + rng.below(max_n - 1);
  std::vector<Edge> edges;
  int want = rng.below(max_m + 1);
  for (int t = 0; t < 8 * max_m && want > 0; ++t) {
    int a = rng.below(n), b = rng.below(n);
    if (a == b) continue;
    Edge e(a, b);
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
    --want;
  }
  return Graph(n, std::move(edges));
}

// Random matching by greedy sampling.
Matching random_matching(const Graph& g, Rng& rng) {
  std::vector<int> ids;
  std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);
  int attempts = 2 * g.edge_count();
  for (int t = 0; t < attempts && g.edge_count() > 0; ++t) {
    int id = rng.below(g.edge_count());
    const Edge& e = g.edge(id);
    if (used[static_cast<size_t>(e.u)] || used[static_cast<size_t>(e.v)])
      continue;
    if (rng.below(3) == 0) continue;
    used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = true;
    ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return make_matching(g, ids);
}

}  // namespace

TEST_CASE("decomposition of a three-edge path") {
  Graph p4 = path(4);
  Matching a = make_matching(p4, {0, 2});
  Matching b = make_matching(p4, {1});
  AlternatingDecomposition d = decompose(p4, a, b);
  REQUIRE(d.odd_paths_a.size() == 1);
  CHECK(d.odd_paths_b.empty());
  CHECK(d.even_paths.empty());
  CHECK(d.cycles.empty());
  const Trail& t = d.odd_paths_a[0];
  CHECK(t.length() == 3);
  CHECK_FALSE(t.closed());
  CHECK(t.edges == std::vector<int>{0, 1, 2});
}

TEST_CASE("decomposition classifies paths by their starting side") {
  Graph p4 = path(4);
  // Sides swapped: the path now starts and ends in b.
  AlternatingDecomposition d =
      decompose(p4, make_matching(p4, {1}), make_matching(p4, {0, 2}));
  CHECK(d.odd_paths_a.empty());
  REQUIRE(d.odd_paths_b.size() == 1);
  CHECK(d.odd_paths_b[0].length() == 3);

  // One matched edge against an empty matching is an odd path of length 1.
  AlternatingDecomposition single =
      decompose(p4, make_matching(p4, {1}), make_matching(p4, {}));
  REQUIRE(single.odd_paths_a.size() == 1);
  CHECK(single.odd_paths_a[0].length() == 1);
}

TEST_CASE("decomposition of an even cycle") {
  Graph c4 = cycle(4);
  Matching a = make_matching(c4, {0, 3});
  Matching b = make_matching(c4, {1, 2});
  AlternatingDecomposition d = decompose(c4, a, b);
  CHECK(d.odd_paths_a.empty());
  CHECK(d.odd_paths_b.empty());
  CHECK(d.even_paths.empty());
  REQUIRE(d.cycles.size() == 1);
  CHECK(d.cycles[0].length() == 4);
  CHECK(d.cycles[0].closed());

  // Every vertex of an alternating cycle meets one edge from each side.
  for (size_t i = 0; i + 1 < d.cycles[0].edges.size(); i += 2) {
    int e1 = d.cycles[0].edges[i], e2 = d.cycles[0].edges[i + 1];
    bool e1a = std::binary_search(a.edge_ids.begin(), a.edge_ids.end(), e1);
    bool e2a = std::binary_search(a.edge_ids.begin(), a.edge_ids.end(), e2);
    CHECK(e1a != e2a);
  }
}

TEST_CASE("shared edges belong to neither side of the decomposition") {
  Graph p4 = path(4);
  Matching a = make_matching(p4, {0, 2});
  Matching b = make_matching(p4, {0});
  AlternatingDecomposition d = decompose(p4, a, b);
  REQUIRE(d.odd_paths_a.size() == 1);
  CHECK(d.odd_paths_a[0].edges == std::vector<int>{2});
}

TEST_CASE("even path between the sides") {
  Graph p5 = path(5);
  Matching a = make_matching(p5, {0, 2});
  Matching b = make_matching(p5, {1, 3});
  AlternatingDecomposition d = decompose(p5, a, b);
  CHECK(d.odd_paths_a.empty());
  CHECK(d.odd_paths_b.empty());
  CHECK(d.cycles.empty());
  REQUIRE(d.even_paths.size() == 1);
  CHECK(d.even_paths[0].length() == 4);
}

TEST_CASE("cardinality difference identity on random inputs") {
  Rng rng{4242};
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 10, 18);
    if (g.edge_count() == 0) continue;
    Matching a = random_matching(g, rng);
    Matching b = random_matching(g, rng);
    auto [size_diff, path_diff] = cardinality_diff_check(g, a, b);
    CAPTURE(to_graph6(g));
    CHECK(size_diff == a.size() - b.size());
    CHECK(size_diff == path_diff);
  }
}

TEST_CASE("canonical form identifies rotations and reversals") {
  Graph c6 = cycle(6);
  // C6 edges sort to (0,1),(0,5),(1,2),(2,3),(3,4),(4,5).
  Trail t1{{0, 1, 2, 3, 4, 5, 0}, {0, 2, 3, 4, 5, 1}, };
  Trail t2{{2, 3, 4, 5, 0, 1, 2}, {3, 4, 5, 1, 0, 2}, };
  Trail t3{{0, 5, 4, 3, 2, 1, 0}, {1, 5, 4, 3, 2, 0}, };
  CHECK(canonical_edge_sequence(t1) == canonical_edge_sequence(t2));
  CHECK(canonical_edge_sequence(t1) == canonical_edge_sequence(t3));
  CHECK(same_trail(t1, t2));

  Trail open1{{0, 1, 2}, {0, 2}};
  Trail open2{{2, 1, 0}, {2, 0}};
  CHECK(canonical_edge_sequence(open1) == canonical_edge_sequence(open2));
}

TEST_CASE("alternating even cycle enumeration on simple graphs") {
  Graph c4 = cycle(4);
  CycleEnumeration r = enumerate_alt_even_cycles(c4, {0, 3}, {1, 2});
  CHECK_FALSE(r.truncated);
  REQUIRE(r.cycles.size() == 1);
  CHECK(r.cycles[0].length() == 4);

  // No alternation is possible when one side is empty.
  CHECK(enumerate_alt_even_cycles(c4, {0, 1, 2, 3}, {}).cycles.empty());

  // Overlapping side sets are rejected.
  CHECK_THROWS_AS(enumerate_alt_even_cycles(c4, {0, 1}, {1, 2}), DomainError);
}

TEST_CASE("closed trails may repeat vertices") {
  // Two triangles sharing vertex 2; the figure-eight walk around both is a
  // closed alternating trail of length 6 through the center twice.
  Graph bowtie(5,
               {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(2, 3), Edge(2, 4),
                Edge(3, 4)});
  int e01 = bowtie.edge_id(0, 1), e02 = bowtie.edge_id(0, 2),
      e12 = bowtie.edge_id(1, 2), e23 = bowtie.edge_id(2, 3),
      e24 = bowtie.edge_id(2, 4), e34 = bowtie.edge_id(3, 4);
  std::vector<int> x{e01, e23, e24};
  std::vector<int> y{e02, e12, e34};
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  CycleEnumeration r = enumerate_alt_even_cycles(bowtie, x, y);
  CHECK_FALSE(r.truncated);
  bool found_long = false;
  for (const Trail& t : r.cycles) {
    if (t.length() == 6) {
      found_long = true;
      int center = 0;
      for (size_t i = 0; i + 1 < t.vertices.size(); ++i)
        if (t.vertices[i] == 2) ++center;
      CHECK(center == 2);
    }
  }
  CHECK(found_long);
}

TEST_CASE("cycle enumeration cap sets the truncation flag") {
  // Disjoint C4s so several cycles exist.
  std::vector<Edge> edges;
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i < 4; ++i)
      edges.emplace_back(4 * b + i, 4 * b + (i + 1) % 4);
  Graph g(8, std::move(edges));
  std::vector<int> x, y;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    // Opposite edges of each square on the same side.
    if ((e.u + e.v) % 4 == 1)
      x.push_back(id);
    else
      y.push_back(id);
  }
  CycleEnumeration full = enumerate_alt_even_cycles(g, x, y);
  CHECK(full.cycles.size() == 2);
  CycleEnumeration capped = enumerate_alt_even_cycles(g, x, y, 1);
  CHECK(capped.truncated);
  CHECK(capped.cycles.size() == 1);
}

TEST_CASE("cycle edge subgraph extracts one side of a trail") {
  Graph c4 = cycle(4);
  CycleEnumeration r = enumerate_alt_even_cycles(c4, {0, 3}, {1, 2});
  REQUIRE(r.cycles.size() == 1);
  EdgeSubgraph sub = cycle_edge_subgraph(c4, r.cycles[0], {1, 2});
  CHECK(sub.edge_ids == std::vector<int>{1, 2});
  CHECK(is_bipartite(sub).bipartite);
}

TEST_CASE("decomposition witnesses cover the symmetric difference exactly") {
  Rng rng{9009};
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 9, 16);
    if (g.edge_count() == 0) continue;
    Matching a = random_matching(g, rng);
    Matching b = random_matching(g, rng);
    AlternatingDecomposition d = decompose(g, a, b);

    std::multiset<int> covered;
    auto absorb = [&](const std::vector<Trail>& trails) {
      for (const Trail& t : trails)
        for (int id : t.edges) covered.insert(id);
    };
    absorb(d.odd_paths_a);
    absorb(d.odd_paths_b);
    absorb(d.even_paths);
    absorb(d.cycles);

    std::multiset<int> expected;
    for (int id : a.edge_ids)
      if (!std::binary_search(b.edge_ids.begin(), b.edge_ids.end(), id))
        expected.insert(id);
    for (int id : b.edge_ids)
      if (!std::binary_search(a.edge_ids.begin(), a.edge_ids.end(), id))
        expected.insert(id);
    CAPTURE(to_graph6(g));
    CHECK(covered == expected);
  }
}
