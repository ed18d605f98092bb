#pragma once

#include <cstdint>
#include <vector>

#include "pdm/graph.hpp"
#include "pdm/matching.hpp"

namespace pdm {

// Ordered pair of edge-disjoint matchings.
struct DisjointPair {
  std::vector<int> h;        // first matching, sorted edge ids
  std::vector<int> h_prime;  // second matching, sorted edge ids

  friend bool operator==(const DisjointPair&, const DisjointPair&) = default;
};

// lambda = max |H| + |H'| over disjoint matching pairs; alpha = the largest
// single side among pairs attaining lambda. witness attains both.
struct PairSolution {
  int lambda = 0;
  int alpha = 0;
  DisjointPair witness;
};

// Exact solve. Works by branch and bound over "union subgraphs": edge sets
// with maximum degree two and no odd cycle component, which are exactly the
// unions of disjoint matching pairs. The objective is lexicographic, edge
// count first, then the best achievable larger side.
PairSolution solve(const Graph& g);

// Independent oracle: enumerates pairs directly by assigning every edge to
// H, H', or neither, with matching-feasibility pruning only. Refuses graphs
// with more than max_edges edges (default per contract).
PairSolution solve_brute(const Graph& g, int max_edges = 20);

// Splits a union subgraph (max degree two, no odd cycle component) into a
// disjoint pair with |H| maximal: each path component of l edges gives
// ceil(l/2) edges to H, each even cycle gives half. Throws DomainError on
// an infeasible union.
DisjointPair split_union(const Graph& g, const std::vector<int>& union_edges);

struct PairEnumeration {
  std::vector<DisjointPair> pairs;
  bool truncated = false;
};

// All ordered pairs with |H| + |H'| = lambda and |H| = alpha. When
// lambda = 2*alpha a pair and its swap are both reported (their edge sets
// differ), matching the ordered-pair reading.
PairEnumeration enumerate_m2(const Graph& g, std::size_t cap = 1000000);

// All ordered pairs attaining lambda, with no restriction on |H|.
PairEnumeration enumerate_lambda_pairs(const Graph& g,
                                       std::size_t cap = 1000000);

struct OverlapSelection {
  std::vector<DisjointPair> pairs;  // the subset maximizing the overlap
  int overlap = 0;                  // |m ∩ (H ∪ H')| attained
  bool truncated = false;           // underlying enumeration hit its cap
};

// Among enumerate_m2(g), the pairs maximizing |m ∩ (H ∪ H')| for a given
// maximum matching m. Pre: m is maximum.
OverlapSelection select_m2_overlap(const Graph& g, const Matching& m,
                                   std::size_t cap = 1000000);

}  // namespace pdm
