#pragma once

#include <cstddef>
#include <vector>

#include "pdm/graph.hpp"
#include "pdm/matching.hpp"

namespace pdm {

// A walk with pairwise distinct edges. Closed trails have
// vertices.front() == vertices.back(); vertices may repeat on closed
// trails, edges never do.
struct Trail {
  std::vector<int> vertices;  // length = edges + 1
  std::vector<int> edges;     // edge ids in walk order

  bool closed() const {
    return !vertices.empty() && vertices.front() == vertices.back();
  }
  int length() const { return static_cast<int>(edges.size()); }
};

// Identity-invariant form of a trail's edge sequence: reversal for open
// trails, all rotations of both directions for closed ones, then the
// lexicographically least sequence. Two trails are the same object exactly
// when these agree.
std::vector<int> canonical_edge_sequence(const Trail& t);

bool same_trail(const Trail& a, const Trail& b);

// The symmetric difference of two matchings, split into its maximal
// alternating paths and even cycles.
struct AlternatingDecomposition {
  std::vector<Trail> odd_paths_a;  // odd length, end-edges from a \ b
  std::vector<Trail> odd_paths_b;  // odd length, end-edges from b \ a
  std::vector<Trail> even_paths;
  std::vector<Trail> cycles;
};

AlternatingDecomposition decompose(const Graph& g, const Matching& a,
                                   const Matching& b);

// Both sides of the count identity |A| - |B| = |MP_o^A| - |MP_o^B|.
std::pair<int, int> cardinality_diff_check(const Graph& g, const Matching& a,
                                           const Matching& b);

struct CycleEnumeration {
  std::vector<Trail> cycles;  // canonicalized, deduplicated
  bool truncated = false;
};

// Every closed even trail alternating between the disjoint edge sets x and
// y. Vertices may repeat; edges may not. Capped with an explicit
// truncation flag.
CycleEnumeration enumerate_alt_even_cycles(const Graph& g,
                                           const std::vector<int>& x,
                                           const std::vector<int>& y,
                                           std::size_t cap = 100000);

// The edges of trail c that belong to y, as a subgraph view.
EdgeSubgraph cycle_edge_subgraph(const Graph& g, const Trail& c,
                                 const std::vector<int>& y);

}  // namespace pdm
