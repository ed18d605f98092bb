#include "pdm/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace pdm {

namespace {

constexpr int kG6Bias = 63;
constexpr int kG6MaxShort = 62;

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw DomainError("vertex count must be nonnegative");
  std::sort(edges_.begin(), edges_.end());
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v >= n_)
      throw DomainError("edge endpoint out of range: (" + std::to_string(e.u) +
                        "," + std::to_string(e.v) + ")");
    if (e.u == e.v)
      throw DomainError("loop edge at vertex " + std::to_string(e.u));
    if (i > 0 && edges_[i - 1] == e)
      throw DomainError("duplicate edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ")");
  }
  adj_.assign(static_cast<size_t>(n_), {});
  inc_.assign(static_cast<size_t>(n_), {});
  for (size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adj_[static_cast<size_t>(e.u)].push_back(e.v);
    adj_[static_cast<size_t>(e.v)].push_back(e.u);
    inc_[static_cast<size_t>(e.u)].push_back(static_cast<int>(id));
    inc_[static_cast<size_t>(e.v)].push_back(static_cast<int>(id));
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  Edge probe(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
  if (it != edges_.end() && *it == probe)
    return static_cast<int>(it - edges_.begin());
  return -1;
}

EdgeSubgraph::EdgeSubgraph(const Graph& g, std::vector<int> ids)
    : parent(&g), edge_ids(std::move(ids)) {
  std::sort(edge_ids.begin(), edge_ids.end());
  edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()),
                 edge_ids.end());
  for (int id : edge_ids)
    if (id < 0 || id >= g.edge_count())
      throw DomainError("edge id " + std::to_string(id) +
                        " outside parent graph");
}

Graph parse_graph6(const std::string& line) {
  // Strip one optional trailing newline so whole lines can be passed as-is.
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw ParseError("empty graph6 input", 0);
  if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);

  for (size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte out of printable range", i);
  }
  if (s[0] == '~')
    throw ParseError("long-form graph6 header not supported (max 62 vertices)",
                     0);

  int n = s[0] - kG6Bias;
  if (n > kG6MaxShort)
    throw ParseError("graph6 vertex count exceeds short form", 0);

  size_t bits_needed = static_cast<size_t>(n) * (n - 1) / 2;
  size_t bytes_needed = (bits_needed + 5) / 6;
  if (s.size() < 1 + bytes_needed)
    throw ParseError("graph6 input truncated", s.size());
  if (s.size() > 1 + bytes_needed)
    throw ParseError("trailing characters after graph6 data", 1 + bytes_needed);

  std::vector<Edge> edges;
  size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      size_t byte_idx = 1 + bit / 6;
      int shift = 5 - static_cast<int>(bit % 6);
      if ((s[byte_idx] - kG6Bias) >> shift & 1) edges.emplace_back(row, col);
    }
  }
  // Padding bits beyond the triangle must be zero.
  for (size_t pad = bit; pad < bytes_needed * 6; ++pad) {
    size_t byte_idx = 1 + pad / 6;
    int shift = 5 - static_cast<int>(pad % 6);
    if ((s[byte_idx] - kG6Bias) >> shift & 1)
      throw ParseError("nonzero graph6 padding bit", byte_idx);
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > kG6MaxShort)
    throw SizeError("graph6 short form supports at most 62 vertices, got " +
                    std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(kG6Bias + n));
  size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
  std::vector<char> groups((bits + 5) / 6, 0);
  size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      if (g.has_edge(row, col))
        groups[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    }
  }
  for (char gbits : groups) out.push_back(static_cast<char>(kG6Bias + gbits));
  return out;
}

Graph parse_edge_list(const std::string& text) {
  // Tokenize, remembering each token's byte offset for error reporting.
  std::vector<std::pair<std::string, size_t>> tokens;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    tokens.emplace_back(text.substr(start, i - start), start);
  }
  if (tokens.empty()) throw ParseError("empty edge list input", 0);

  auto to_int = [](const std::pair<std::string, size_t>& tok) {
    try {
      size_t used = 0;
      int value = std::stoi(tok.first, &used);
      if (used != tok.first.size() || value < 0) throw std::invalid_argument("");
      return value;
    } catch (const std::exception&) {
      throw ParseError("expected nonnegative integer, got '" + tok.first + "'",
                       tok.second);
    }
  };

  int n = to_int(tokens[0]);
  if ((tokens.size() - 1) % 2 != 0)
    throw ParseError("dangling endpoint at end of edge list",
                     tokens.back().second);

  std::vector<Edge> edges;
  for (size_t t = 1; t + 1 < tokens.size(); t += 2) {
    int u = to_int(tokens[t]);
    int v = to_int(tokens[t + 1]);
    if (u >= n || v >= n)
      throw ParseError("vertex id out of range (n=" + std::to_string(n) + ")",
                       tokens[u >= n ? t : t + 1].second);
    if (u == v)
      throw ParseError("loop edge at vertex " + std::to_string(u),
                       tokens[t].second);
    Edge e(u, v);
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw ParseError("duplicate edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ")",
                       tokens[t].second);
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

BipartiteResult is_bipartite(const EdgeSubgraph& sub) {
  const Graph& g = *sub.parent;
  int n = g.vertex_count();

  // Adjacency restricted to the subgraph's edges.
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int id : sub.edge_ids) {
    const Edge& e = g.edge(id);
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }

  BipartiteResult res;
  res.coloring.assign(static_cast<size_t>(n), -1);
  std::vector<int> parent(static_cast<size_t>(n), -1);

  for (int root = 0; root < n; ++root) {
    if (adj[static_cast<size_t>(root)].empty() ||
        res.coloring[static_cast<size_t>(root)] != -1)
      continue;
    res.coloring[static_cast<size_t>(root)] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<size_t>(u)]) {
        if (res.coloring[static_cast<size_t>(v)] == -1) {
          res.coloring[static_cast<size_t>(v)] =
              1 - res.coloring[static_cast<size_t>(u)];
          parent[static_cast<size_t>(v)] = u;
          q.push(v);
        } else if (res.coloring[static_cast<size_t>(v)] ==
                   res.coloring[static_cast<size_t>(u)]) {
          // Same color on both ends: the two tree paths to the root plus
          // this edge close an odd walk.
          res.bipartite = false;
          std::vector<int> up, vp;
          for (int x = u; x != -1; x = parent[static_cast<size_t>(x)])
            up.push_back(x);
          for (int x = v; x != -1; x = parent[static_cast<size_t>(x)])
            vp.push_back(x);
          // Trim to the lowest common ancestor.
          while (up.size() > 1 && vp.size() > 1 &&
                 up[up.size() - 2] == vp[vp.size() - 2]) {
            up.pop_back();
            vp.pop_back();
          }
          res.odd_walk.assign(up.begin(), up.end());
          for (auto it = vp.rbegin() + 1; it != vp.rend(); ++it)
            res.odd_walk.push_back(*it);
          res.odd_walk.push_back(u);
          std::reverse(res.odd_walk.begin(), res.odd_walk.end());
          return res;
        }
      }
    }
  }
  return res;
}

std::vector<int> isolated_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

}  // namespace pdm
