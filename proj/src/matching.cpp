#include "pdm/matching.hpp"

#include <algorithm>
#include <numeric>

namespace pdm {

namespace {

// Single phase of the blossom algorithm: look for an augmenting path from
// `root` under the current mate array, contracting odd cycles as they are
// met. Returns the far endpoint of an augmenting path and fills parent
// links, or -1 when none exists from this root.
class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  bool augment_from(int root, std::vector<int>& mate) {
    parent_.assign(static_cast<size_t>(n_), -1);
    base_.resize(static_cast<size_t>(n_));
    std::iota(base_.begin(), base_.end(), 0);
    in_queue_.assign(static_cast<size_t>(n_), false);

    queue_.clear();
    queue_.push_back(root);
    in_queue_[static_cast<size_t>(root)] = true;

    for (size_t head = 0; head < queue_.size(); ++head) {
      int v = queue_[head];
      for (int to : g_.neighbors(v)) {
        if (base_[static_cast<size_t>(v)] == base_[static_cast<size_t>(to)] ||
            mate[static_cast<size_t>(v)] == to)
          continue;
        if (to == root ||
            (mate[static_cast<size_t>(to)] != -1 &&
             parent_[static_cast<size_t>(mate[static_cast<size_t>(to)])] !=
                 -1)) {
          // Even vertex reached along a non-tree edge: odd cycle.
          contract(v, to, mate);
        } else if (parent_[static_cast<size_t>(to)] == -1) {
          parent_[static_cast<size_t>(to)] = v;
          if (mate[static_cast<size_t>(to)] == -1) {
            augment_path(to, mate);
            return true;
          }
          int next = mate[static_cast<size_t>(to)];
          if (!in_queue_[static_cast<size_t>(next)]) {
            in_queue_[static_cast<size_t>(next)] = true;
            queue_.push_back(next);
          }
        }
      }
    }
    return false;
  }

 private:
  int lowest_common_base(int a, int b, const std::vector<int>& mate) {
    std::vector<bool> seen(static_cast<size_t>(n_), false);
    int x = a;
    while (true) {
      x = base_[static_cast<size_t>(x)];
      seen[static_cast<size_t>(x)] = true;
      if (mate[static_cast<size_t>(x)] == -1) break;
      x = parent_[static_cast<size_t>(mate[static_cast<size_t>(x)])];
    }
    int y = b;
    while (true) {
      y = base_[static_cast<size_t>(y)];
      if (seen[static_cast<size_t>(y)]) return y;
      y = parent_[static_cast<size_t>(mate[static_cast<size_t>(y)])];
    }
  }

  void mark_path(int v, int b, int child, const std::vector<int>& mate,
                 std::vector<bool>& on_blossom) {
    while (base_[static_cast<size_t>(v)] != b) {
      int mv = mate[static_cast<size_t>(v)];
      on_blossom[static_cast<size_t>(base_[static_cast<size_t>(v)])] = true;
      on_blossom[static_cast<size_t>(base_[static_cast<size_t>(mv)])] = true;
      parent_[static_cast<size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<size_t>(mv)];
    }
  }

  void contract(int v, int to, std::vector<int>& mate) {
    int b = lowest_common_base(v, to, mate);
    std::vector<bool> on_blossom(static_cast<size_t>(n_), false);
    mark_path(v, b, to, mate, on_blossom);
    mark_path(to, b, v, mate, on_blossom);
    for (int i = 0; i < n_; ++i) {
      if (on_blossom[static_cast<size_t>(base_[static_cast<size_t>(i)])]) {
        base_[static_cast<size_t>(i)] = b;
        if (!in_queue_[static_cast<size_t>(i)]) {
          in_queue_[static_cast<size_t>(i)] = true;
          queue_.push_back(i);
        }
      }
    }
  }

  void augment_path(int v, std::vector<int>& mate) {
    while (v != -1) {
      int pv = parent_[static_cast<size_t>(v)];
      int next = mate[static_cast<size_t>(pv)];
      mate[static_cast<size_t>(v)] = pv;
      mate[static_cast<size_t>(pv)] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> parent_, base_;
  std::vector<bool> in_queue_;
  std::vector<int> queue_;
};

// Size of a maximum matching that respects `forced_mate`: vertices already
// paired there are untouchable, the rest are matched from scratch.
int max_matching_size(const Graph& g, const std::vector<int>& seed_mate) {
  std::vector<int> mate = seed_mate;
  BlossomSearch search(g);
  int grown = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mate[static_cast<size_t>(v)] == -1 && search.augment_from(v, mate))
      ++grown;
  int paired = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mate[static_cast<size_t>(v)] != -1) ++paired;
  return paired / 2;
}

// The graph with both endpoints of every `removed` edge deleted (kept as
// isolated placeholders so vertex ids stay stable).
Graph without_covered(const Graph& g, const std::vector<int>& kept_edges) {
  std::vector<bool> blocked(static_cast<size_t>(g.vertex_count()), false);
  for (int id : kept_edges) {
    blocked[static_cast<size_t>(g.edge(id).u)] = true;
    blocked[static_cast<size_t>(g.edge(id).v)] = true;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!blocked[static_cast<size_t>(e.u)] && !blocked[static_cast<size_t>(e.v)])
      edges.push_back(e);
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace

bool is_matching(const Graph& g, const std::vector<int>& edge_ids) {
  std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);
  std::vector<bool> seen_edge(static_cast<size_t>(g.edge_count()), false);
  for (int id : edge_ids) {
    if (id < 0 || id >= g.edge_count()) return false;
    if (seen_edge[static_cast<size_t>(id)]) return false;
    seen_edge[static_cast<size_t>(id)] = true;
    const Edge& e = g.edge(id);
    if (used[static_cast<size_t>(e.u)] || used[static_cast<size_t>(e.v)])
      return false;
    used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = true;
  }
  return true;
}

Matching make_matching(const Graph& g, std::vector<int> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  if (!is_matching(g, edge_ids))
    throw DomainError("edge set is not a matching of the graph");
  Matching m;
  m.edge_ids = std::move(edge_ids);
  m.mate.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (int id : m.edge_ids) {
    const Edge& e = g.edge(id);
    m.mate[static_cast<size_t>(e.u)] = e.v;
    m.mate[static_cast<size_t>(e.v)] = e.u;
  }
  return m;
}

int beta(const Graph& g) {
  std::vector<int> empty(static_cast<size_t>(g.vertex_count()), -1);
  return max_matching_size(g, empty);
}

Matching maximum_matching(const Graph& g) {
  int target = beta(g);
  // Greedy over ascending edge ids: keep an edge whenever the remainder of
  // the graph can still complete a matching of maximum size. This lands on
  // the lexicographically least witness.
  std::vector<int> chosen;
  for (int id = 0; id < g.edge_count() && static_cast<int>(chosen.size()) < target;
       ++id) {
    std::vector<int> attempt = chosen;
    attempt.push_back(id);
    if (!is_matching(g, attempt)) continue;
    Graph rest = without_covered(g, attempt);
    if (static_cast<int>(attempt.size()) + beta(rest) == target)
      chosen = std::move(attempt);
  }
  return make_matching(g, std::move(chosen));
}

bool has_augmenting_path(const Graph& g, const Matching& m) {
  if (static_cast<int>(m.mate.size()) != g.vertex_count())
    throw DomainError("matching does not belong to this graph");
  std::vector<int> mate = m.mate;
  BlossomSearch search(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mate[static_cast<size_t>(v)] == -1 && search.augment_from(v, mate))
      return true;
  return false;
}

namespace {

std::uint64_t count_pm_rec(const Graph& g, std::vector<bool>& used, int from) {
  int v = from;
  while (v < g.vertex_count() && used[static_cast<size_t>(v)]) ++v;
  if (v == g.vertex_count()) return 1;
  used[static_cast<size_t>(v)] = true;
  std::uint64_t total = 0;
  for (int w : g.neighbors(v)) {
    if (used[static_cast<size_t>(w)]) continue;
    used[static_cast<size_t>(w)] = true;
    total += count_pm_rec(g, used, v + 1);
    used[static_cast<size_t>(w)] = false;
  }
  used[static_cast<size_t>(v)] = false;
  return total;
}

}  // namespace

std::uint64_t count_perfect_matchings(const Graph& g) {
  if (g.vertex_count() % 2 != 0) return 0;
  std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);
  return count_pm_rec(g, used, 0);
}

}  // namespace pdm
