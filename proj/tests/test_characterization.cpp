#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "pdm/characterization.hpp"
#include "pdm/graph.hpp"
#include "pdm/matching.hpp"
#include "pdm/pair_solver.hpp"
#include "pdm/structure.hpp"

using namespace pdm;

namespace {

Graph spanner_plus(const std::vector<std::pair<int, int>>& chords) {
  Graph base = spanner_template();
  std::vector<Edge> edges = base.edges();
  for (auto [u, v] : chords) edges.emplace_back(u, v);
  return Graph(10, std::move(edges));
}

SForest only_forest(const Graph& g) {
  ForestEnumeration forests = find_spanning_s_forests(g);
  REQUIRE(forests.forests.size() >= 1);
  return forests.forests[0];
}

SForest intended_forest() {
  SForest f;
  f.spanners.push_back(canonical_embedding(
      SpannerEmbedding{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}));
  return f;
}

}  // namespace

TEST_CASE("bare template satisfies all three conditions") {
  Graph s = spanner_template();
  SForest f = only_forest(s);
  EdgePartition part = classify_edges(s, f);
  CHECK(check_condition_a(s, f, part).verdict == Verdict::pass);
  CHECK(check_condition_b(s, f, part).verdict == Verdict::pass);
  CHECK(check_condition_c(s, f, part).verdict == Verdict::pass);

  StructuralResult res = structural_extremal(s);
  CHECK(res.exists_passing == Verdict::pass);
  CHECK_FALSE(res.forests_truncated);
}

TEST_CASE("a b edge at a 1-vertex violates the first condition") {
  // (0,7) joins 1-vertex 0 to the far 3-vertex, which is not its base.
  Graph g = spanner_plus({{0, 7}});
  SForest f = intended_forest();
  EdgePartition part = classify_edges(g, f);
  ConditionReport rep = check_condition_a(g, f, part);
  REQUIRE(rep.verdict == Verdict::fail);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].vertices == std::vector<int>{0});
  CHECK(rep.violations[0].edges == std::vector<int>{g.edge_id(0, 7)});
  CHECK(check_condition_b(g, f, part).verdict == Verdict::pass);
}

TEST_CASE("a base chord next to a b edge violates the second condition") {
  // (0,2) is a base chord at 0; (1,6) is a b edge at 0's forest neighbor.
  Graph g = spanner_plus({{0, 2}, {1, 6}});
  SForest f = intended_forest();
  EdgePartition part = classify_edges(g, f);
  CHECK(check_condition_a(g, f, part).verdict == Verdict::pass);
  ConditionReport rep = check_condition_b(g, f, part);
  REQUIRE(rep.verdict == Verdict::fail);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].vertices == std::vector<int>{0, 1});
  CHECK(rep.violations[0].edges == std::vector<int>{g.edge_id(1, 6)});
}

TEST_CASE("a base chord alone is harmless") {
  Graph g = spanner_plus({{0, 2}});
  SForest f = intended_forest();
  EdgePartition part = classify_edges(g, f);
  CHECK(check_condition_a(g, f, part).verdict == Verdict::pass);
  CHECK(check_condition_b(g, f, part).verdict == Verdict::pass);
  CHECK(check_condition_c(g, f, part).verdict == Verdict::pass);
}

TEST_CASE("a bipartite b part on a triggered cycle violates the third "
          "condition") {
  // (1,6) closes the alternating cycle 1-2-7-6-1 whose b edges are the
  // bridge and the chord, two disjoint edges.
  Graph g = spanner_plus({{1, 6}});
  SForest f = intended_forest();
  EdgePartition part = classify_edges(g, f);
  CHECK(check_condition_a(g, f, part).verdict == Verdict::pass);
  CHECK(check_condition_b(g, f, part).verdict == Verdict::pass);
  ConditionReport rep = check_condition_c(g, f, part);
  REQUIRE(rep.verdict == Verdict::fail);
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations[0].edges.size() == 4);

  // The widened trigger flags the same cycle through its 3-3 bridge edge.
  ConditionReport widened = check_condition_c(g, f, part, 100000, true);
  CHECK(widened.verdict == Verdict::fail);
}

TEST_CASE("ratio extremality on known graphs") {
  CHECK(ratio_extremal(spanner_template()));
  CHECK_FALSE(ratio_extremal(parse_graph6("A_")));
  CHECK_FALSE(ratio_extremal(parse_graph6("IheA@GUAo")));
  CHECK_FALSE(ratio_extremal(spanner_plus({{0, 3}})));
}

TEST_CASE("theorem verdict on the bare template") {
  TheoremVerdict v = verify_theorem(spanner_template());
  CHECK(v.beta == 5);
  CHECK(v.lambda == 8);
  CHECK(v.alpha == 4);
  CHECK(v.ratio_extremal);
  CHECK(v.agreement == Verdict::pass);
  CHECK(v.every_forest == Verdict::pass);
}

TEST_CASE("theorem verdict when a chord breaks extremality") {
  // (0,3) lets one long path absorb an extra matching edge, so the larger
  // side reaches 5 and the ratio drops to 1. The lone forest then fails
  // the first condition, and both sides of the equivalence are false.
  Graph g = spanner_plus({{0, 3}});
  PairSolution sol = solve(g);
  CHECK(sol.lambda == 8);
  CHECK(sol.alpha == 5);

  TheoremVerdict v = verify_theorem(g);
  CHECK_FALSE(v.ratio_extremal);
  CHECK(v.structural.exists_passing == Verdict::fail);
  CHECK(v.agreement == Verdict::pass);
  CHECK(v.every_forest == Verdict::pass);
}

TEST_CASE("theorem verdict checks every forest when extremal") {
  // The base chord preserves extremality and adds a second forest; both
  // must pass for the strengthened claim.
  Graph g = spanner_plus({{0, 2}});
  TheoremVerdict v = verify_theorem(g);
  CHECK(v.ratio_extremal);
  CHECK(v.agreement == Verdict::pass);
  CHECK(v.every_forest == Verdict::pass);
  CHECK(v.structural.checks.size() == 2);
}

TEST_CASE("theorem verdict with several failing forests") {
  // Three chords create a second routing; both forests end up violating
  // the third condition, matching the broken ratio.
  Graph g = spanner_plus({{2, 6}, {1, 7}, {1, 6}});
  ForestEnumeration forests = find_spanning_s_forests(g);
  CHECK(forests.forests.size() == 2);

  PairSolution sol = solve(g);
  CHECK(sol.alpha == 5);

  TheoremVerdict v = verify_theorem(g);
  CHECK_FALSE(v.ratio_extremal);
  CHECK(v.structural.exists_passing == Verdict::fail);
  CHECK(v.agreement == Verdict::pass);
}

TEST_CASE("tight cycle cap turns the verdict inconclusive") {
  Graph g = spanner_plus({{2, 6}, {1, 7}, {1, 6}});
  Caps caps;
  caps.cycle_cap = 1;
  TheoremVerdict v = verify_theorem(g, caps);
  CHECK(v.agreement == Verdict::inconclusive);

  StructuralResult res = structural_extremal(g, caps, true);
  CHECK(res.exists_passing == Verdict::inconclusive);
}

TEST_CASE("isolated vertices are rejected up front") {
  Graph g(11, spanner_template().edges());
  CHECK_THROWS_AS(verify_theorem(g), DomainError);
  CHECK_THROWS_AS(structural_extremal(g), DomainError);
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::pass) == "pass");
  CHECK(to_string(Verdict::fail) == "fail");
  CHECK(to_string(Verdict::inconclusive) == "inconclusive");
}
