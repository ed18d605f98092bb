#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <string>
#include <vector>

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

Graph spanner() { return parse_graph6("IhC?HC@?G"); }

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

void check_witness(const Graph& g, const PairSolution& sol) {
  CHECK(is_matching(g, sol.witness.h));
  CHECK(is_matching(g, sol.witness.h_prime));
  CHECK(static_cast<int>(sol.witness.h.size()) == sol.alpha);
  CHECK(static_cast<int>(sol.witness.h.size() + sol.witness.h_prime.size()) ==
        sol.lambda);
  std::vector<int> both = sol.witness.h;
  both.insert(both.end(), sol.witness.h_prime.begin(),
              sol.witness.h_prime.end());
  std::sort(both.begin(), both.end());
  CHECK(std::adjacent_find(both.begin(), both.end()) == both.end());
}

}  // namespace

TEST_CASE("known optimal values") {
  struct Case {
    Graph g;
    int lambda, alpha;
  };
  std::vector<Case> cases;
  cases.push_back({parse_graph6("A_"), 1, 1});
  cases.push_back({path(4), 3, 2});
  cases.push_back({cycle(3), 2, 1});
  cases.push_back({cycle(4), 4, 2});
  cases.push_back({cycle(5), 4, 2});
  cases.push_back({cycle(6), 6, 3});
  cases.push_back({parse_graph6("C~"), 4, 2});
  cases.push_back({spanner(), 8, 4});

  for (const Case& c : cases) {
    CAPTURE(to_graph6(c.g));
    PairSolution sol = solve(c.g);
    CHECK(sol.lambda == c.lambda);
    CHECK(sol.alpha == c.alpha);
    check_witness(c.g, sol);
  }
}

TEST_CASE("lambda and alpha add over components") {
  // P4 and C4 side by side.
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < 4; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < 4; ++i) edges.emplace_back(4 + i, 4 + (i + 1) % 4);
  Graph g(8, std::move(edges));
  PairSolution sol = solve(g);
  CHECK(sol.lambda == 7);
  CHECK(sol.alpha == 4);
  check_witness(g, sol);
}

TEST_CASE("brute solver matches on named graphs and respects its guard") {
  for (const Graph& g : {path(4), cycle(5), cycle(6), spanner()}) {
    PairSolution fast = solve(g);
    PairSolution brute = solve_brute(g);
    CHECK(fast.lambda == brute.lambda);
    CHECK(fast.alpha == brute.alpha);
  }

  Graph k7 = parse_graph6("F~~~w");
  CHECK_THROWS_AS(solve_brute(k7), SizeError);
  PairSolution k7b = solve_brute(k7, 21);
  CHECK(k7b.lambda == 6);
  CHECK(k7b.alpha == 3);
  PairSolution k7f = solve(k7);
  CHECK(k7f.lambda == 6);
  CHECK(k7f.alpha == 3);
}

TEST_CASE("solver agrees with brute force on every graph up to 6 vertices") {
  std::ifstream in(std::string(FIXTURES_DIR) + "/graphs_le7.g6");
  REQUIRE(in.good());
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Graph g = parse_graph6(line);
    if (g.vertex_count() > 6) break;
    CAPTURE(line);
    PairSolution fast = solve(g);
    PairSolution brute = solve_brute(g);
    CHECK(fast.lambda == brute.lambda);
    CHECK(fast.alpha == brute.alpha);
    check_witness(g, fast);
    ++checked;
  }
  CHECK(checked == 208);
}

TEST_CASE("solver agrees with brute force on random graphs") {
  Rng rng{777};
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng, 10, 14);
    CAPTURE(to_graph6(g));
    PairSolution fast = solve(g);
    PairSolution brute = solve_brute(g);
    CHECK(fast.lambda == brute.lambda);
    CHECK(fast.alpha == brute.alpha);
    check_witness(g, fast);
  }
}

TEST_CASE("splitting a union subgraph alternates sides") {
  Graph p6 = path(6);
  DisjointPair p = split_union(p6, {0, 1, 2, 3, 4});
  CHECK(p.h == std::vector<int>{0, 2, 4});
  CHECK(p.h_prime == std::vector<int>{1, 3});

  Graph c4 = cycle(4);
  DisjointPair pc = split_union(c4, {0, 1, 2, 3});
  CHECK(p.h.size() == 3);
  CHECK(is_matching(c4, pc.h));
  CHECK(is_matching(c4, pc.h_prime));
  CHECK(pc.h.size() == 2);
  CHECK(pc.h_prime.size() == 2);

  // A claw has a degree-3 vertex and is not a legal union.
  Graph claw(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
  CHECK_THROWS_AS(split_union(claw, {0, 1, 2}), DomainError);

  // Odd cycles cannot be split into two matchings.
  Graph c3 = cycle(3);
  CHECK_THROWS_AS(split_union(c3, {0, 1, 2}), DomainError);
}

TEST_CASE("optimal pair enumeration on small graphs") {
  Graph k2 = parse_graph6("A_");
  PairEnumeration m2k2 = enumerate_m2(k2);
  CHECK_FALSE(m2k2.truncated);
  REQUIRE(m2k2.pairs.size() == 1);
  CHECK(m2k2.pairs[0].h == std::vector<int>{0});
  CHECK(m2k2.pairs[0].h_prime.empty());

  // C4 splits into its two perfect matchings, in both orders.
  Graph c4 = cycle(4);
  PairEnumeration m2c4 = enumerate_m2(c4);
  CHECK_FALSE(m2c4.truncated);
  CHECK(m2c4.pairs.size() == 2);
  for (const DisjointPair& p : m2c4.pairs) {
    CHECK(p.h.size() == 2);
    CHECK(p.h_prime.size() == 2);
  }
  CHECK(m2c4.pairs[0].h != m2c4.pairs[1].h);

  // P4 attains lambda with sides 2+1 or 1+2, but only the former is optimal.
  Graph p4 = path(4);
  PairEnumeration all = enumerate_lambda_pairs(p4);
  CHECK(all.pairs.size() == 2);
  PairEnumeration best = enumerate_m2(p4);
  REQUIRE(best.pairs.size() == 1);
  CHECK(best.pairs[0].h == std::vector<int>{0, 2});
  CHECK(best.pairs[0].h_prime == std::vector<int>{1});
}

TEST_CASE("optimal pair enumeration on the ten-vertex template") {
  Graph s = spanner();
  PairEnumeration m2 = enumerate_m2(s);
  CHECK_FALSE(m2.truncated);
  CHECK(m2.pairs.size() == 4);
  int bridge = s.edge_id(2, 7);
  REQUIRE(bridge >= 0);
  for (const DisjointPair& p : m2.pairs) {
    CHECK(p.h.size() == 4);
    CHECK(p.h_prime.size() == 4);
    CHECK_FALSE(std::binary_search(p.h.begin(), p.h.end(), bridge));
    CHECK_FALSE(
        std::binary_search(p.h_prime.begin(), p.h_prime.end(), bridge));
  }
}

TEST_CASE("enumeration honors its cap") {
  PairEnumeration capped = enumerate_m2(cycle(4), 1);
  CHECK(capped.truncated);
  CHECK(capped.pairs.size() <= 1);
}

TEST_CASE("overlap selection against a fixed maximum matching") {
  Graph s = spanner();
  Matching m = maximum_matching(s);
  REQUIRE(m.size() == 5);
  OverlapSelection sel = select_m2_overlap(s, m);
  CHECK_FALSE(sel.truncated);
  CHECK(sel.overlap == 4);
  CHECK(sel.pairs.size() == 4);
  for (const DisjointPair& p : sel.pairs) {
    std::vector<int> joint = p.h;
    joint.insert(joint.end(), p.h_prime.begin(), p.h_prime.end());
    std::sort(joint.begin(), joint.end());
    int overlap = 0;
    for (int id : m.edge_ids)
      if (std::binary_search(joint.begin(), joint.end(), id)) ++overlap;
    CHECK(overlap == 4);
  }

  // P4's only optimal pair is ({0,2},{1}); the whole maximum matching {0,2}
  // lies inside it, so the overlap is 2.
  Graph p4 = path(4);
  OverlapSelection sp4 = select_m2_overlap(p4, maximum_matching(p4));
  CHECK(sp4.overlap == 2);
  REQUIRE(sp4.pairs.size() == 1);
  CHECK(sp4.pairs[0].h == std::vector<int>{0, 2});

  CHECK_THROWS_AS(select_m2_overlap(p4, make_matching(p4, {1})), DomainError);
}

TEST_CASE("isolated vertices do not disturb the solver") {
  Graph g(5, {Edge(1, 2), Edge(2, 3)});
  PairSolution sol = solve(g);
  CHECK(sol.lambda == 2);
  CHECK(sol.alpha == 1);
}
