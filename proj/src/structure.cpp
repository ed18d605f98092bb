#include "pdm/structure.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <set>

#include "pdm/matching.hpp"
#include "pdm/pair_solver.hpp"

namespace pdm {

Graph spanner_template() {
  std::vector<Edge> edges;
  for (int side = 0; side < 2; ++side) {
    int off = 5 * side;
    for (int i = 0; i < 4; ++i) edges.emplace_back(off + i, off + i + 1);
  }
  edges.emplace_back(2, 7);
  return Graph(10, std::move(edges));
}

std::string spanner_template_graph6() { return to_graph6(spanner_template()); }

void spanner_self_check() {
  static std::once_flag done;
  std::call_once(done, [] {
    Graph s = spanner_template();
    auto fail = [](const std::string& what) {
      throw DomainError("spanner template self-check failed: " + what);
    };
    if (beta(s) != 5) fail("matching number is not 5");
    PairSolution sol = solve(s);
    if (sol.lambda != 8) fail("lambda is not 8");
    if (sol.alpha != 4) fail("alpha is not 4");
    if (count_perfect_matchings(s) != 1) fail("perfect matching not unique");

    SForest self{{canonical_embedding(
        SpannerEmbedding{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}})}};
    EdgePartition part = classify_edges(s, self);
    if (part.u.size() != 4) fail("|U| is not 4");
    if (part.l.size() != 4) fail("|L| is not 4");

    int bridge = s.edge_id(2, 7);
    PairEnumeration m2 = enumerate_m2(s);
    if (m2.truncated || m2.pairs.empty()) fail("pair enumeration incomplete");
    for (const DisjointPair& p : m2.pairs) {
      if (std::binary_search(p.h.begin(), p.h.end(), bridge) ||
          std::binary_search(p.h_prime.begin(), p.h_prime.end(), bridge))
        fail("bridge appears in an optimal pair");
    }
    if (enumerate_embeddings(s).size() != 1)
      fail("template embeds in itself other than identically");
  });
}

SpannerEmbedding canonical_embedding(const SpannerEmbedding& e) {
  SpannerEmbedding c = e;
  if (c.side1[0] > c.side1[4]) std::reverse(c.side1.begin(), c.side1.end());
  if (c.side2[0] > c.side2[4]) std::reverse(c.side2.begin(), c.side2.end());
  if (c.side1[2] > c.side2[2]) std::swap(c.side1, c.side2);
  return c;
}

std::vector<SpannerEmbedding> enumerate_embeddings(const Graph& g) {
  int n = g.vertex_count();
  std::set<SpannerEmbedding> found;
  std::vector<bool> used(static_cast<size_t>(n), false);

  // Grows one side around its midpoint c: picks the two midpoint neighbors
  // b and d (b < d kills the flip symmetry) and then the outer vertices.
  auto grow_side = [&](int c, int exclude, auto&& emit) {
    const auto& nbr = g.neighbors(c);
    for (size_t i = 0; i < nbr.size(); ++i) {
      int b = nbr[i];
      if (b == exclude || used[static_cast<size_t>(b)]) continue;
      used[static_cast<size_t>(b)] = true;
      for (size_t j = i + 1; j < nbr.size(); ++j) {
        int d = nbr[j];
        if (d == exclude || used[static_cast<size_t>(d)]) continue;
        used[static_cast<size_t>(d)] = true;
        for (int a : g.neighbors(b)) {
          if (used[static_cast<size_t>(a)] || a == c || a == exclude) continue;
          used[static_cast<size_t>(a)] = true;
          for (int ev : g.neighbors(d)) {
            if (used[static_cast<size_t>(ev)] || ev == c || ev == exclude)
              continue;
            used[static_cast<size_t>(ev)] = true;
            emit(std::array<int, 5>{a, b, c, d, ev});
            used[static_cast<size_t>(ev)] = false;
          }
          used[static_cast<size_t>(a)] = false;
        }
        used[static_cast<size_t>(d)] = false;
      }
      used[static_cast<size_t>(b)] = false;
    }
  };

  for (const Edge& bridge : g.edges()) {
    int c1 = bridge.u, c2 = bridge.v;
    used[static_cast<size_t>(c1)] = used[static_cast<size_t>(c2)] = true;
    grow_side(c1, c2, [&](const std::array<int, 5>& s1) {
      grow_side(c2, c1, [&](const std::array<int, 5>& s2) {
        found.insert(canonical_embedding(SpannerEmbedding{s1, s2}));
      });
    });
    used[static_cast<size_t>(c1)] = used[static_cast<size_t>(c2)] = false;
  }
  return {found.begin(), found.end()};
}

namespace {

std::uint64_t vertex_mask(const SpannerEmbedding& e) {
  std::uint64_t m = 0;
  for (int v : e.side1) m |= std::uint64_t{1} << v;
  for (int v : e.side2) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace

ForestEnumeration find_spanning_s_forests(const Graph& g, std::size_t cap) {
  ForestEnumeration out;
  int n = g.vertex_count();
  if (n > 64)
    throw SizeError("forest search supports at most 64 vertices, got " +
                    std::to_string(n));
  if (n == 0 || n % 10 != 0) return out;

  std::vector<SpannerEmbedding> embs = enumerate_embeddings(g);
  std::vector<std::uint64_t> masks;
  masks.reserve(embs.size());
  for (const auto& e : embs) masks.push_back(vertex_mask(e));

  std::vector<std::vector<int>> by_lowest(static_cast<size_t>(n));
  for (size_t i = 0; i < embs.size(); ++i)
    by_lowest[static_cast<size_t>(std::countr_zero(masks[i]))].push_back(
        static_cast<int>(i));

  std::uint64_t full =
      (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<int> chosen;

  auto dive = [&](auto&& self, std::uint64_t covered) -> bool {
    if (covered == full) {
      if (out.forests.size() >= cap) {
        out.truncated = true;
        return false;
      }
      SForest f;
      for (int i : chosen) f.spanners.push_back(embs[static_cast<size_t>(i)]);
      std::sort(f.spanners.begin(), f.spanners.end());
      out.forests.push_back(std::move(f));
      return true;
    }
    int v = std::countr_zero(~covered & full);
    for (int i : by_lowest[static_cast<size_t>(v)]) {
      if (masks[static_cast<size_t>(i)] & covered) continue;
      chosen.push_back(i);
      bool keep = self(self, covered | masks[static_cast<size_t>(i)]);
      chosen.pop_back();
      if (!keep) return false;
    }
    return true;
  };
  dive(dive, 0);
  return out;
}

void validate_forest(const Graph& g, const SForest& f) {
  int n = g.vertex_count();
  std::vector<bool> covered(static_cast<size_t>(n), false);
  auto take = [&](int v) {
    if (v < 0 || v >= n) throw DomainError("forest vertex outside host");
    if (covered[static_cast<size_t>(v)])
      throw DomainError("forest spanners overlap at vertex " +
                        std::to_string(v));
    covered[static_cast<size_t>(v)] = true;
  };
  for (const SpannerEmbedding& e : f.spanners) {
    for (int v : e.side1) take(v);
    for (int v : e.side2) take(v);
    for (const auto& side : {e.side1, e.side2})
      for (int i = 0; i < 4; ++i)
        if (!g.has_edge(side[static_cast<size_t>(i)],
                        side[static_cast<size_t>(i + 1)]))
          throw DomainError("forest side edge missing from host");
    if (!g.has_edge(e.bridge_u(), e.bridge_v()))
      throw DomainError("forest bridge missing from host");
  }
  for (int v = 0; v < n; ++v)
    if (!covered[static_cast<size_t>(v)])
      throw DomainError("forest does not cover vertex " + std::to_string(v));
}

std::vector<int> vertex_roles(const Graph& g, const SForest& f) {
  validate_forest(g, f);
  std::vector<int> role(static_cast<size_t>(g.vertex_count()), 0);
  constexpr int kByPosition[5] = {1, 2, 3, 2, 1};
  for (const SpannerEmbedding& e : f.spanners)
    for (const auto& side : {e.side1, e.side2})
      for (int i = 0; i < 5; ++i)
        role[static_cast<size_t>(side[static_cast<size_t>(i)])] =
            kByPosition[i];
  return role;
}

int vertex_role(const Graph& g, const SForest& f, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw DomainError("vertex outside host graph");
  return vertex_roles(g, f)[static_cast<size_t>(v)];
}

int base_of(const Graph& g, const SForest& f, int v) {
  validate_forest(g, f);
  for (const SpannerEmbedding& e : f.spanners)
    for (const auto& side : {e.side1, e.side2})
      if (side[0] == v || side[4] == v) return side[2];
  throw DomainError("base_of requires a 1-vertex of the forest");
}

std::pair<int, int> edge_role_pair(const Graph& g, const SForest& f, int eid) {
  if (eid < 0 || eid >= g.edge_count())
    throw DomainError("edge id outside host graph");
  std::vector<int> role = vertex_roles(g, f);
  int ru = role[static_cast<size_t>(g.edge(eid).u)];
  int rv = role[static_cast<size_t>(g.edge(eid).v)];
  return {std::min(ru, rv), std::max(ru, rv)};
}

EdgePartition classify_edges(const Graph& g, const SForest& f,
                             bool exclude_forest_from_b) {
  std::vector<int> role = vertex_roles(g, f);

  std::vector<bool> in_forest(static_cast<size_t>(g.edge_count()), false);
  // base[v] is defined for 1-vertices only.
  std::vector<int> base(static_cast<size_t>(g.vertex_count()), -1);
  for (const SpannerEmbedding& e : f.spanners) {
    for (const auto& side : {e.side1, e.side2}) {
      for (int i = 0; i < 4; ++i)
        in_forest[static_cast<size_t>(g.edge_id(
            side[static_cast<size_t>(i)], side[static_cast<size_t>(i + 1)]))] =
            true;
      base[static_cast<size_t>(side[0])] = side[2];
      base[static_cast<size_t>(side[4])] = side[2];
    }
    in_forest[static_cast<size_t>(g.edge_id(e.bridge_u(), e.bridge_v()))] =
        true;
  }

  EdgePartition part;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    int ru = role[static_cast<size_t>(e.u)];
    int rv = role[static_cast<size_t>(e.v)];
    if (in_forest[static_cast<size_t>(id)]) {
      if (ru == 1 || rv == 1) {
        part.u.push_back(id);
        continue;
      }
      if (ru == 2 || rv == 2) {
        part.l.push_back(id);
        continue;
      }
      // Bridge: joins two 3-vertices, falls through to delta/b handling.
    }
    bool is_delta = (ru == 1 && base[static_cast<size_t>(e.u)] == e.v) ||
                    (rv == 1 && base[static_cast<size_t>(e.v)] == e.u);
    if (is_delta) {
      part.delta.push_back(id);
    } else if (!(exclude_forest_from_b && in_forest[static_cast<size_t>(id)])) {
      part.b.push_back(id);
    }
  }
  return part;
}

}  // namespace pdm
