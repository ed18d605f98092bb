#include "pdm/pair_solver.hpp"

#include <algorithm>
#include <numeric>

namespace pdm {

namespace {

// Incremental state for growing a union subgraph edge by edge: per-vertex
// degrees plus a rollback union-find that tracks, for every component, its
// edge count and whether it has been closed into a cycle. The running h
// value is the best achievable larger side of any split of the current
// edge set, maintained through the join/close deltas.
class UnionState {
 public:
  explicit UnionState(const Graph& g)
      : g_(g),
        deg_(static_cast<size_t>(g.vertex_count()), 0),
        parent_(static_cast<size_t>(g.vertex_count())),
        size_(static_cast<size_t>(g.vertex_count()), 1),
        comp_edges_(static_cast<size_t>(g.vertex_count()), 0),
        free_slots_(2 * g.vertex_count()) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int edge_total() const { return k_; }
  int best_side() const { return h_; }
  int free_slots() const { return free_slots_; }

  bool can_add(int eid) const {
    const Edge& e = g_.edge(eid);
    if (deg_[static_cast<size_t>(e.u)] >= 2 ||
        deg_[static_cast<size_t>(e.v)] >= 2)
      return false;
    int ru = find(e.u), rv = find(e.v);
    // Closing a component is only allowed when the cycle comes out even.
    if (ru == rv && (comp_edges_[static_cast<size_t>(ru)] + 1) % 2 != 0)
      return false;
    return true;
  }

  void add(int eid) {
    const Edge& e = g_.edge(eid);
    int ru = find(e.u), rv = find(e.v);
    Rec rec;
    if (ru == rv) {
      rec = {true, ru, 0};
      comp_edges_[static_cast<size_t>(ru)] += 1;
    } else {
      int dh = (comp_edges_[static_cast<size_t>(ru)] % 2 == 0 &&
                comp_edges_[static_cast<size_t>(rv)] % 2 == 0)
                   ? 1
                   : 0;
      if (size_[static_cast<size_t>(ru)] < size_[static_cast<size_t>(rv)])
        std::swap(ru, rv);
      parent_[static_cast<size_t>(rv)] = ru;
      size_[static_cast<size_t>(ru)] += size_[static_cast<size_t>(rv)];
      comp_edges_[static_cast<size_t>(ru)] +=
          comp_edges_[static_cast<size_t>(rv)] + 1;
      h_ += dh;
      rec = {false, rv, dh};
    }
    deg_[static_cast<size_t>(e.u)]++;
    deg_[static_cast<size_t>(e.v)]++;
    free_slots_ -= 2;
    k_ += 1;
    rec.eid = eid;
    trail_.push_back(rec);
  }

  void undo() {
    Rec rec = trail_.back();
    trail_.pop_back();
    const Edge& e = g_.edge(rec.eid);
    if (rec.closed_cycle) {
      comp_edges_[static_cast<size_t>(rec.node)] -= 1;
    } else {
      int child = rec.node;
      int root = parent_[static_cast<size_t>(child)];
      parent_[static_cast<size_t>(child)] = child;
      size_[static_cast<size_t>(root)] -= size_[static_cast<size_t>(child)];
      comp_edges_[static_cast<size_t>(root)] -=
          comp_edges_[static_cast<size_t>(child)] + 1;
      h_ -= rec.dh;
    }
    deg_[static_cast<size_t>(e.u)]--;
    deg_[static_cast<size_t>(e.v)]--;
    free_slots_ += 2;
    k_ -= 1;
  }

 private:
  struct Rec {
    bool closed_cycle = false;
    int node = 0;  // closed: component root; union: the absorbed child root
    int dh = 0;
    int eid = 0;
  };

  int find(int x) const {
    while (parent_[static_cast<size_t>(x)] != x)
      x = parent_[static_cast<size_t>(x)];
    return x;
  }

  const Graph& g_;
  std::vector<int> deg_, parent_, size_, comp_edges_;
  std::vector<Rec> trail_;
  int free_slots_;
  int k_ = 0;
  int h_ = 0;
};

// Branch and bound over one edge list (a connected component). Keeps the
// lexicographically best (edge count, larger side) along with a witness
// union.
class ComponentSolver {
 public:
  ComponentSolver(const Graph& g, std::vector<int> eids)
      : state_(g), eids_(std::move(eids)) {}

  void run() { dive(0); }

  int best_lambda() const { return best_l_; }
  int best_alpha() const { return best_h_; }
  const std::vector<int>& best_union() const { return best_union_; }

 private:
  void dive(size_t idx) {
    if (idx == eids_.size()) {
      if (state_.edge_total() > best_l_ ||
          (state_.edge_total() == best_l_ && state_.best_side() > best_h_)) {
        best_l_ = state_.edge_total();
        best_h_ = state_.best_side();
        best_union_ = current_;
      }
      return;
    }
    int extra = std::min(static_cast<int>(eids_.size() - idx),
                         state_.free_slots() / 2);
    int ub_l = state_.edge_total() + extra;
    int ub_h = state_.best_side() + extra;
    if (ub_l < best_l_ || (ub_l == best_l_ && ub_h <= best_h_)) return;

    int eid = eids_[idx];
    if (state_.can_add(eid)) {
      state_.add(eid);
      current_.push_back(eid);
      dive(idx + 1);
      current_.pop_back();
      state_.undo();
    }
    dive(idx + 1);
  }

  UnionState state_;
  std::vector<int> eids_;
  std::vector<int> current_;
  std::vector<int> best_union_;
  int best_l_ = -1;
  int best_h_ = -1;
};

// Edge ids grouped by connected component of g, ascending within a group,
// groups ordered by their smallest vertex.
std::vector<std::vector<int>> component_edge_lists(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int comps = 0;
  for (int root = 0; root < n; ++root) {
    if (comp[static_cast<size_t>(root)] != -1) continue;
    comp[static_cast<size_t>(root)] = comps;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (comp[static_cast<size_t>(w)] == -1) {
          comp[static_cast<size_t>(w)] = comps;
          stack.push_back(w);
        }
      }
    }
    ++comps;
  }
  std::vector<std::vector<int>> lists(static_cast<size_t>(comps));
  for (int id = 0; id < g.edge_count(); ++id)
    lists[static_cast<size_t>(comp[static_cast<size_t>(g.edge(id).u)])]
        .push_back(id);
  return lists;
}

// Ordered edge walk of every component of a degree <= 2 edge set, plus a
// cycle flag. Paths start at their smaller-id endpoint; cycles start at
// their smallest vertex, stepping first along the smaller edge id.
struct UnionComponent {
  std::vector<int> edges;  // in walk order
  bool cycle = false;
};

std::vector<UnionComponent> walk_union(const Graph& g,
                                       const std::vector<int>& union_edges) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> inc(static_cast<size_t>(n));
  for (int id : union_edges) {
    const Edge& e = g.edge(id);
    inc[static_cast<size_t>(e.u)].push_back(id);
    inc[static_cast<size_t>(e.v)].push_back(id);
    if (inc[static_cast<size_t>(e.u)].size() > 2 ||
        inc[static_cast<size_t>(e.v)].size() > 2)
      throw DomainError("union subgraph has a vertex of degree above two");
  }

  std::vector<bool> used(static_cast<size_t>(g.edge_count()), false);
  std::vector<UnionComponent> out;

  auto walk_from = [&](int start, bool expect_cycle) {
    UnionComponent c;
    c.cycle = expect_cycle;
    int v = start;
    int enter = -1;
    while (true) {
      int next_edge = -1;
      for (int id : inc[static_cast<size_t>(v)])
        if (!used[static_cast<size_t>(id)] && id != enter &&
            (next_edge == -1 || id < next_edge))
          next_edge = id;
      if (next_edge == -1) break;
      used[static_cast<size_t>(next_edge)] = true;
      c.edges.push_back(next_edge);
      const Edge& e = g.edge(next_edge);
      v = (e.u == v) ? e.v : e.u;
      enter = next_edge;
      if (expect_cycle && v == start) break;
    }
    out.push_back(std::move(c));
  };

  // Paths first, anchored at degree-one endpoints.
  for (int v = 0; v < n; ++v) {
    if (inc[static_cast<size_t>(v)].size() != 1) continue;
    int id = inc[static_cast<size_t>(v)][0];
    if (!used[static_cast<size_t>(id)]) walk_from(v, false);
  }
  // What remains is cycles.
  for (int v = 0; v < n; ++v) {
    for (int id : inc[static_cast<size_t>(v)]) {
      if (!used[static_cast<size_t>(id)]) {
        walk_from(v, true);
        if (out.back().edges.size() % 2 != 0)
          throw DomainError("union subgraph contains an odd cycle component");
      }
    }
  }
  return out;
}

}  // namespace

PairSolution solve(const Graph& g) {
  PairSolution sol;
  std::vector<int> union_total;
  for (auto& eids : component_edge_lists(g)) {
    if (eids.empty()) continue;
    ComponentSolver solver(g, std::move(eids));
    solver.run();
    sol.lambda += solver.best_lambda();
    sol.alpha += solver.best_alpha();
    union_total.insert(union_total.end(), solver.best_union().begin(),
                       solver.best_union().end());
  }
  std::sort(union_total.begin(), union_total.end());
  sol.witness = split_union(g, union_total);
  return sol;
}

namespace {

class BruteSolver {
 public:
  explicit BruteSolver(const Graph& g)
      : g_(g),
        cov_h_(static_cast<size_t>(g.vertex_count()), false),
        cov_hp_(static_cast<size_t>(g.vertex_count()), false) {}

  PairSolution run() {
    assign(0);
    PairSolution sol;
    sol.lambda = best_sum_;
    sol.alpha = best_max_;
    sol.witness = best_;
    return sol;
  }

 private:
  void assign(int eid) {
    if (eid == g_.edge_count()) {
      int sum = static_cast<int>(h_.size() + hp_.size());
      int mx = static_cast<int>(std::max(h_.size(), hp_.size()));
      if (sum > best_sum_ || (sum == best_sum_ && mx > best_max_)) {
        best_sum_ = sum;
        best_max_ = mx;
        best_ = {h_, hp_};
      }
      return;
    }
    int rem = g_.edge_count() - eid;
    if (static_cast<int>(h_.size() + hp_.size()) + rem < best_sum_) return;

    const Edge& e = g_.edge(eid);
    bool u_h = cov_h_[static_cast<size_t>(e.u)];
    bool v_h = cov_h_[static_cast<size_t>(e.v)];
    bool u_hp = cov_hp_[static_cast<size_t>(e.u)];
    bool v_hp = cov_hp_[static_cast<size_t>(e.v)];

    if (!u_h && !v_h) {
      cov_h_[static_cast<size_t>(e.u)] = cov_h_[static_cast<size_t>(e.v)] =
          true;
      h_.push_back(eid);
      assign(eid + 1);
      h_.pop_back();
      cov_h_[static_cast<size_t>(e.u)] = u_h;
      cov_h_[static_cast<size_t>(e.v)] = v_h;
    }
    if (!u_hp && !v_hp) {
      cov_hp_[static_cast<size_t>(e.u)] = cov_hp_[static_cast<size_t>(e.v)] =
          true;
      hp_.push_back(eid);
      assign(eid + 1);
      hp_.pop_back();
      cov_hp_[static_cast<size_t>(e.u)] = u_hp;
      cov_hp_[static_cast<size_t>(e.v)] = v_hp;
    }
    assign(eid + 1);
  }

  const Graph& g_;
  std::vector<bool> cov_h_, cov_hp_;
  std::vector<int> h_, hp_;
  DisjointPair best_;
  int best_sum_ = 0;
  int best_max_ = 0;
};

}  // namespace

PairSolution solve_brute(const Graph& g, int max_edges) {
  if (g.edge_count() > max_edges)
    throw SizeError("solve_brute guard: graph has " +
                    std::to_string(g.edge_count()) + " edges, limit " +
                    std::to_string(max_edges));
  return BruteSolver(g).run();
}

DisjointPair split_union(const Graph& g, const std::vector<int>& union_edges) {
  DisjointPair pair;
  for (const UnionComponent& c : walk_union(g, union_edges)) {
    for (size_t i = 0; i < c.edges.size(); ++i)
      (i % 2 == 0 ? pair.h : pair.h_prime).push_back(c.edges[i]);
  }
  std::sort(pair.h.begin(), pair.h.end());
  std::sort(pair.h_prime.begin(), pair.h_prime.end());
  return pair;
}

namespace {

// Enumerates every union subgraph with exactly `target` edges, feeding each
// to `sink`. Sink returns false to stop early.
class LambdaUnionEnumerator {
 public:
  LambdaUnionEnumerator(const Graph& g, int target)
      : g_(g), state_(g), target_(target) {
    eids_.resize(static_cast<size_t>(g.edge_count()));
    std::iota(eids_.begin(), eids_.end(), 0);
  }

  template <typename Sink>
  bool enumerate(Sink&& sink) {
    return dive(0, sink);
  }

 private:
  template <typename Sink>
  bool dive(size_t idx, Sink& sink) {
    if (state_.edge_total() == target_) {
      if (!sink(current_)) return false;
      // Larger supersets cannot also have `target` edges, so backtrack.
      return true;
    }
    if (idx == eids_.size()) return true;
    int extra = std::min(static_cast<int>(eids_.size() - idx),
                         state_.free_slots() / 2);
    if (state_.edge_total() + extra < target_) return true;

    int eid = eids_[idx];
    if (state_.can_add(eid)) {
      state_.add(eid);
      current_.push_back(eid);
      bool keep = dive(idx + 1, sink);
      current_.pop_back();
      state_.undo();
      if (!keep) return false;
    }
    return dive(idx + 1, sink);
  }

  const Graph& g_;
  UnionState state_;
  std::vector<int> eids_;
  std::vector<int> current_;
  int target_;
};

// All alternating splits of one union, optionally restricted to |H| = want.
void emit_splits(const Graph& g, const std::vector<int>& union_edges,
                 int want_h, std::size_t cap, PairEnumeration& out) {
  std::vector<UnionComponent> comps = walk_union(g, union_edges);

  // Per component and phase, the number of edges handed to H.
  auto h_share = [](const UnionComponent& c, int phase) {
    int l = static_cast<int>(c.edges.size());
    return phase == 0 ? (l + 1) / 2 : l / 2;
  };

  // Remaining-range bounds for pruning the phase choice.
  std::vector<int> max_rest(comps.size() + 1, 0), min_rest(comps.size() + 1, 0);
  for (size_t i = comps.size(); i-- > 0;) {
    max_rest[i] = max_rest[i + 1] + h_share(comps[i], 0);
    min_rest[i] = min_rest[i + 1] + h_share(comps[i], 1);
  }

  std::vector<int> phase(comps.size(), 0);
  DisjointPair pair;

  auto choose = [&](auto&& self, size_t i, int h_so_far) -> bool {
    if (want_h >= 0 && (h_so_far + max_rest[i] < want_h ||
                        h_so_far + min_rest[i] > want_h))
      return true;
    if (i == comps.size()) {
      if (out.pairs.size() >= cap) {
        out.truncated = true;
        return false;
      }
      pair.h.clear();
      pair.h_prime.clear();
      for (size_t c = 0; c < comps.size(); ++c) {
        const auto& edges = comps[c].edges;
        for (size_t j = 0; j < edges.size(); ++j) {
          bool to_h = (j % 2 == 0) == (phase[c] == 0);
          (to_h ? pair.h : pair.h_prime).push_back(edges[j]);
        }
      }
      std::sort(pair.h.begin(), pair.h.end());
      std::sort(pair.h_prime.begin(), pair.h_prime.end());
      out.pairs.push_back(pair);
      return true;
    }
    for (int p = 0; p < 2; ++p) {
      phase[i] = p;
      if (!self(self, i + 1, h_so_far + h_share(comps[i], p))) return false;
    }
    return true;
  };
  choose(choose, 0, 0);
}

PairEnumeration enumerate_pairs_attaining(const Graph& g, int lambda,
                                          int want_h, std::size_t cap) {
  PairEnumeration out;
  std::size_t unions_seen = 0;
  LambdaUnionEnumerator en(g, lambda);
  en.enumerate([&](const std::vector<int>& union_edges) {
    if (++unions_seen > cap) {
      out.truncated = true;
      return false;
    }
    emit_splits(g, union_edges, want_h, cap, out);
    return !out.truncated;
  });
  return out;
}

}  // namespace

PairEnumeration enumerate_m2(const Graph& g, std::size_t cap) {
  PairSolution sol = solve(g);
  return enumerate_pairs_attaining(g, sol.lambda, sol.alpha, cap);
}

PairEnumeration enumerate_lambda_pairs(const Graph& g, std::size_t cap) {
  return enumerate_pairs_attaining(g, solve(g).lambda, -1, cap);
}

OverlapSelection select_m2_overlap(const Graph& g, const Matching& m,
                                   std::size_t cap) {
  if (has_augmenting_path(g, m))
    throw DomainError("select_m2_overlap requires a maximum matching");
  std::vector<bool> in_m(static_cast<size_t>(g.edge_count()), false);
  for (int id : m.edge_ids) in_m[static_cast<size_t>(id)] = true;

  PairEnumeration all = enumerate_m2(g, cap);
  OverlapSelection sel;
  sel.truncated = all.truncated;
  sel.overlap = -1;
  for (DisjointPair& p : all.pairs) {
    int ov = 0;
    for (int id : p.h)
      if (in_m[static_cast<size_t>(id)]) ++ov;
    for (int id : p.h_prime)
      if (in_m[static_cast<size_t>(id)]) ++ov;
    if (ov > sel.overlap) {
      sel.overlap = ov;
      sel.pairs.clear();
    }
    if (ov == sel.overlap) sel.pairs.push_back(std::move(p));
  }
  if (sel.overlap < 0) sel.overlap = 0;
  return sel;
}

}  // namespace pdm
