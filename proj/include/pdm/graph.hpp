#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pdm/errors.hpp"

namespace pdm {

// Undirected edge, endpoints kept ordered so (u,v) and (v,u) compare equal.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Vertices are 0..n-1; the edge list is sorted and
// duplicate-free, so an edge's position in it is a stable id used by every
// other module. Instances are immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

  // Neighbor vertex ids, ascending.
  const std::vector<int>& neighbors(int v) const {
    return adj_[static_cast<size_t>(v)];
  }
  // Ids of edges incident to v, ascending.
  const std::vector<int>& incident_edges(int v) const {
    return inc_[static_cast<size_t>(v)];
  }
  int degree(int v) const {
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
  }

  // Edge id for (u,v), or -1 when the pair is not an edge.
  int edge_id(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inc_;
};

// A subset of a parent graph's edges, identified by edge ids (sorted,
// duplicate-free). The parent must outlive the view.
struct EdgeSubgraph {
  const Graph* parent = nullptr;
  std::vector<int> edge_ids;

  EdgeSubgraph() = default;
  EdgeSubgraph(const Graph& g, std::vector<int> ids);
};

// graph6 text form (short form, up to 62 vertices). parse rejects long-form
// headers, out-of-range bytes, wrong lengths, and nonzero padding bits, and
// names the byte offset in the error. to_graph6 is the exact inverse.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// Plain edge-list form: first token is the vertex count, then one "u v" pair
// per line. Rejects loops, duplicate edges, and out-of-range ids.
Graph parse_edge_list(const std::string& text);

struct BipartiteResult {
  bool bipartite = true;
  // Color (0/1) per vertex covered by the subgraph, -1 for the rest.
  std::vector<int> coloring;
  // When not bipartite: a closed odd-length walk, as a vertex sequence with
  // front() == back(), every step along a subgraph edge.
  std::vector<int> odd_walk;
};

BipartiteResult is_bipartite(const EdgeSubgraph& sub);

std::vector<int> isolated_vertices(const Graph& g);

}  // namespace pdm
