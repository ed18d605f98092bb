#include "pdm/alternating.hpp"

#include <algorithm>
#include <set>

namespace pdm {

std::vector<int> canonical_edge_sequence(const Trail& t) {
  const std::vector<int>& seq = t.edges;
  if (seq.empty()) return {};
  std::vector<int> rev(seq.rbegin(), seq.rend());
  if (!t.closed()) return std::min(seq, rev);
  std::vector<int> best;
  for (size_t shift = 0; shift < seq.size(); ++shift) {
    std::vector<int> rot(seq.begin() + static_cast<long>(shift), seq.end());
    rot.insert(rot.end(), seq.begin(), seq.begin() + static_cast<long>(shift));
    if (best.empty() || rot < best) best = rot;
    std::vector<int> rot_rev(rev.begin() + static_cast<long>(shift), rev.end());
    rot_rev.insert(rot_rev.end(), rev.begin(),
                   rev.begin() + static_cast<long>(shift));
    if (rot_rev < best) best = rot_rev;
  }
  return best;
}

bool same_trail(const Trail& a, const Trail& b) {
  if (a.closed() != b.closed()) return false;
  return canonical_edge_sequence(a) == canonical_edge_sequence(b);
}

AlternatingDecomposition decompose(const Graph& g, const Matching& a,
                                   const Matching& b) {
  int n = g.vertex_count();
  if (static_cast<int>(a.mate.size()) != n ||
      static_cast<int>(b.mate.size()) != n)
    throw DomainError("matchings do not belong to this graph");

  // Which side of the symmetric difference each edge is on: 0 for a only,
  // 1 for b only, absent otherwise.
  std::vector<int> side(static_cast<size_t>(g.edge_count()), -1);
  for (int id : a.edge_ids) side[static_cast<size_t>(id)] = 0;
  for (int id : b.edge_ids)
    side[static_cast<size_t>(id)] = (side[static_cast<size_t>(id)] == 0) ? -1 : 1;

  std::vector<std::vector<int>> inc(static_cast<size_t>(n));
  for (int id = 0; id < g.edge_count(); ++id) {
    if (side[static_cast<size_t>(id)] < 0) continue;
    inc[static_cast<size_t>(g.edge(id).u)].push_back(id);
    inc[static_cast<size_t>(g.edge(id).v)].push_back(id);
  }

  std::vector<bool> used(static_cast<size_t>(g.edge_count()), false);
  AlternatingDecomposition out;

  auto walk = [&](int start) {
    Trail t;
    t.vertices.push_back(start);
    int v = start;
    int enter = -1;
    while (true) {
      int next = -1;
      for (int id : inc[static_cast<size_t>(v)])
        if (!used[static_cast<size_t>(id)] && id != enter &&
            (next == -1 || id < next))
          next = id;
      if (next == -1) break;
      used[static_cast<size_t>(next)] = true;
      t.edges.push_back(next);
      const Edge& e = g.edge(next);
      v = (e.u == v) ? e.v : e.u;
      t.vertices.push_back(v);
      enter = next;
      if (v == start) break;
    }
    return t;
  };

  // Path components start at a vertex meeting exactly one difference edge.
  for (int v = 0; v < n; ++v) {
    if (inc[static_cast<size_t>(v)].size() != 1) continue;
    int id = inc[static_cast<size_t>(v)][0];
    if (used[static_cast<size_t>(id)]) continue;
    Trail t = walk(v);
    if (t.length() % 2 == 0) {
      out.even_paths.push_back(std::move(t));
    } else if (side[static_cast<size_t>(t.edges.front())] == 0) {
      out.odd_paths_a.push_back(std::move(t));
    } else {
      out.odd_paths_b.push_back(std::move(t));
    }
  }
  // Remaining components are even cycles (degrees in the difference are at
  // most one per matching, so exactly two here).
  for (int v = 0; v < n; ++v)
    for (int id : inc[static_cast<size_t>(v)])
      if (!used[static_cast<size_t>(id)]) out.cycles.push_back(walk(v));
  return out;
}

std::pair<int, int> cardinality_diff_check(const Graph& g, const Matching& a,
                                           const Matching& b) {
  AlternatingDecomposition d = decompose(g, a, b);
  int lhs = a.size() - b.size();
  int rhs = static_cast<int>(d.odd_paths_a.size()) -
            static_cast<int>(d.odd_paths_b.size());
  return {lhs, rhs};
}

CycleEnumeration enumerate_alt_even_cycles(const Graph& g,
                                           const std::vector<int>& x,
                                           const std::vector<int>& y,
                                           std::size_t cap) {
  // -1 absent, 0 in x, 1 in y.
  std::vector<int> side(static_cast<size_t>(g.edge_count()), -1);
  for (int id : x) side[static_cast<size_t>(id)] = 0;
  for (int id : y) {
    if (side[static_cast<size_t>(id)] == 0)
      throw DomainError("alternating sets must be disjoint");
    side[static_cast<size_t>(id)] = 1;
  }

  std::vector<std::vector<int>> inc(static_cast<size_t>(g.vertex_count()));
  for (int id = 0; id < g.edge_count(); ++id)
    if (side[static_cast<size_t>(id)] >= 0) {
      inc[static_cast<size_t>(g.edge(id).u)].push_back(id);
      inc[static_cast<size_t>(g.edge(id).v)].push_back(id);
    }

  CycleEnumeration out;
  std::set<std::vector<int>> seen;
  std::vector<bool> used(static_cast<size_t>(g.edge_count()), false);
  Trail trail;

  // Closed trails are anchored at their minimum edge id, so extensions only
  // ever use larger ids; each trail then shows up once per direction, and
  // the canonical set collapses the pair.
  auto extend = [&](auto&& self, int v, int start_vertex, int min_eid) -> bool {
    if (v == start_vertex && trail.length() >= 4 && trail.length() % 2 == 0 &&
        side[static_cast<size_t>(trail.edges.back())] !=
            side[static_cast<size_t>(trail.edges.front())]) {
      std::vector<int> key = canonical_edge_sequence(trail);
      if (seen.insert(key).second) {
        if (out.cycles.size() >= cap) {
          out.truncated = true;
          return false;
        }
        out.cycles.push_back(trail);
      }
    }
    int need = 1 - side[static_cast<size_t>(trail.edges.back())];
    for (int id : inc[static_cast<size_t>(v)]) {
      if (id <= min_eid || used[static_cast<size_t>(id)] ||
          side[static_cast<size_t>(id)] != need)
        continue;
      const Edge& e = g.edge(id);
      int w = (e.u == v) ? e.v : e.u;
      used[static_cast<size_t>(id)] = true;
      trail.edges.push_back(id);
      trail.vertices.push_back(w);
      bool keep = self(self, w, start_vertex, min_eid);
      trail.vertices.pop_back();
      trail.edges.pop_back();
      used[static_cast<size_t>(id)] = false;
      if (!keep) return false;
    }
    return true;
  };

  for (int eid = 0; eid < g.edge_count(); ++eid) {
    if (side[static_cast<size_t>(eid)] < 0) continue;
    const Edge& e = g.edge(eid);
    for (int dir = 0; dir < 2; ++dir) {
      int from = dir == 0 ? e.u : e.v;
      int to = dir == 0 ? e.v : e.u;
      used[static_cast<size_t>(eid)] = true;
      trail.vertices = {from, to};
      trail.edges = {eid};
      bool keep = extend(extend, to, from, eid);
      used[static_cast<size_t>(eid)] = false;
      if (!keep) return out;
    }
  }
  return out;
}

EdgeSubgraph cycle_edge_subgraph(const Graph& g, const Trail& c,
                                 const std::vector<int>& y) {
  std::vector<bool> in_y(static_cast<size_t>(g.edge_count()), false);
  for (int id : y) in_y[static_cast<size_t>(id)] = true;
  std::vector<int> picked;
  for (int id : c.edges)
    if (in_y[static_cast<size_t>(id)]) picked.push_back(id);
  return EdgeSubgraph(g, std::move(picked));
}

}  // namespace pdm
