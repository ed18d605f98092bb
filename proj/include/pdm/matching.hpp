#pragma once

#include <cstdint>
#include <vector>

#include "pdm/graph.hpp"

namespace pdm {

// A matching stored as sorted edge ids plus the induced mate array
// (mate[v] is v's partner, or -1 when v is uncovered).
struct Matching {
  std::vector<int> edge_ids;
  std::vector<int> mate;

  int size() const { return static_cast<int>(edge_ids.size()); }
  bool covers(int v) const { return mate[static_cast<size_t>(v)] != -1; }
};

bool is_matching(const Graph& g, const std::vector<int>& edge_ids);

// Validates and packages an edge set as a Matching.
Matching make_matching(const Graph& g, std::vector<int> edge_ids);

// Maximum-cardinality matching via repeated augmenting-path search with
// blossom contraction. Deterministic witness: among all maximum matchings,
// the lexicographically least sorted edge-id sequence.
Matching maximum_matching(const Graph& g);

int beta(const Graph& g);

// True when some alternating path joins two uncovered vertices, that is,
// when m is not maximum.
bool has_augmenting_path(const Graph& g, const Matching& m);

std::uint64_t count_perfect_matchings(const Graph& g);

}  // namespace pdm
