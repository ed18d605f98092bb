#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pdm/graph.hpp"

namespace pdm {

// The 10-vertex, 9-edge template: two 5-vertex paths joined by one edge
// between their midpoints. Degree encodes the role: 1 at path ends, 2 one
// step in, 3 at the midpoints.
Graph spanner_template();

// Template encoded in graph6 form ("IhC?HC@?G").
std::string spanner_template_graph6();

// Recomputes the template's advertised golden values (matching number,
// pair solver values, unique perfect matching, side edge counts, bridge
// exclusion) and throws DomainError on any mismatch. Runs once per
// process; entry points call this before trusting the template.
void spanner_self_check();

// One spanner subgraph inside a host graph, as a role map. Each side is
// the vertex sequence of its path: [a, b, c, d, e] with c the midpoint.
// The canonical form orients every side with the smaller end vertex first
// and orders the two sides by midpoint id.
struct SpannerEmbedding {
  std::array<int, 5> side1{};
  std::array<int, 5> side2{};

  int bridge_u() const { return side1[2]; }
  int bridge_v() const { return side2[2]; }

  friend bool operator==(const SpannerEmbedding&,
                         const SpannerEmbedding&) = default;
  friend auto operator<=>(const SpannerEmbedding&,
                          const SpannerEmbedding&) = default;
};

SpannerEmbedding canonical_embedding(const SpannerEmbedding& e);

// All spanner embeddings of g, canonical and sorted.
std::vector<SpannerEmbedding> enumerate_embeddings(const Graph& g);

// A set of vertex-disjoint embeddings covering every vertex of the host.
struct SForest {
  std::vector<SpannerEmbedding> spanners;

  int spanner_count() const { return static_cast<int>(spanners.size()); }
};

struct ForestEnumeration {
  std::vector<SForest> forests;
  bool truncated = false;
};

// Every spanning spanner forest of g, by exact-cover backtracking on the
// lowest uncovered vertex. Empty when the vertex count is not a multiple
// of ten.
ForestEnumeration find_spanning_s_forests(const Graph& g,
                                          std::size_t cap = 10000);

// Throws DomainError unless f's embeddings are vertex-disjoint, cover all
// of g, and use only host edges.
void validate_forest(const Graph& g, const SForest& f);

// Role of every vertex under f: 1 for path ends, 2 for their neighbors,
// 3 for midpoints.
std::vector<int> vertex_roles(const Graph& g, const SForest& f);

int vertex_role(const Graph& g, const SForest& f, int v);

// The midpoint on v's side. Pre: v is a 1-vertex of f.
int base_of(const Graph& g, const SForest& f, int v);

// Endpoint roles of an edge, smaller first.
std::pair<int, int> edge_role_pair(const Graph& g, const SForest& f, int eid);

// Partition of the host's edges relative to a spanning forest:
//   u      forest edges meeting a 1-vertex
//   l      remaining forest edges meeting a 2-vertex
//   delta  host edges joining a 1-vertex to its base
//   b      everything else (forest bridges included)
// With exclude_forest_from_b, bridges are dropped from b instead.
struct EdgePartition {
  std::vector<int> u, l, delta, b;
};

EdgePartition classify_edges(const Graph& g, const SForest& f,
                             bool exclude_forest_from_b = false);

}  // namespace pdm
