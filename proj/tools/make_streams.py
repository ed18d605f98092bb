#!/usr/bin/env python3
"""Regenerate the graph6 fixture streams under fixtures/.

Produces:
  graphs_le7.g6     every graph on 1..7 vertices (1252 lines)
  connected_le8.g6  every connected graph on 2..8 vertices (12112 lines)

The 7-vertex universe comes straight from the networkx graph atlas. The
8-vertex connected graphs are built by vertex augmentation: every connected
8-vertex graph arises from some 7-vertex graph by adding one vertex with a
nonempty neighborhood, so augmenting the full 7-vertex universe and removing
isomorphic duplicates (WL-hash buckets refined by exact VF2 checks) is
exhaustive.

Streams for n >= 9 are impractical this way; use nauty instead:
  geng -c 9 > connected_9.g6
"""

import sys
from itertools import combinations

import networkx as nx

EXPECTED_ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
EXPECTED_CONNECTED = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def g6(G):
    return nx.to_graph6_bytes(G, header=False).decode().strip()


def atlas_by_order():
    by_n = {n: [] for n in EXPECTED_ALL}
    for G in nx.graph_atlas_g()[1:]:
        by_n[G.number_of_nodes()].append(G)
    for n, graphs in by_n.items():
        assert len(graphs) == EXPECTED_ALL[n], (n, len(graphs))
    return by_n


def dedup_isomorphic(graphs):
    buckets = {}
    for G in graphs:
        key = (G.number_of_edges(),
               nx.weisfeiler_lehman_graph_hash(G, iterations=3))
        buckets.setdefault(key, []).append(G)
    reps = []
    for bucket in buckets.values():
        kept = []
        for G in bucket:
            if not any(nx.is_isomorphic(G, H) for H in kept):
                kept.append(G)
        reps.extend(kept)
    return reps


def connected_8(seven_vertex_universe):
    candidates = []
    for G in seven_vertex_universe:
        for r in range(1, 8):
            for nbrs in combinations(range(7), r):
                H = G.copy()
                H.add_node(7)
                H.add_edges_from((7, v) for v in nbrs)
                if nx.is_connected(H):
                    candidates.append(H)
    print(f"  8-vertex connected candidates: {len(candidates)}", flush=True)
    reps = dedup_isomorphic(candidates)
    assert len(reps) == EXPECTED_CONNECTED[8], len(reps)
    return reps


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "fixtures"
    by_n = atlas_by_order()

    lines = []
    for n in sorted(by_n):
        lines.extend(sorted(g6(G) for G in by_n[n]))
    with open(f"{out_dir}/graphs_le7.g6", "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"graphs_le7.g6: {len(lines)} graphs", flush=True)

    lines = []
    for n in sorted(EXPECTED_CONNECTED):
        if n <= 7:
            conn = [G for G in by_n[n] if nx.is_connected(G)]
        else:
            print("  augmenting to 8 vertices...", flush=True)
            conn = connected_8(by_n[7])
        assert len(conn) == EXPECTED_CONNECTED[n], (n, len(conn))
        lines.extend(sorted(g6(G) for G in conn))
    with open(f"{out_dir}/connected_le8.g6", "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"connected_le8.g6: {len(lines)} graphs", flush=True)


if __name__ == "__main__":
    main()
