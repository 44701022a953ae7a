#!/usr/bin/env python3
"""Generate the complete small-graph corpora in data/corpora/.

Orders 4..7 come straight from the networkx Graph Atlas (all graphs up to
isomorphism through order 7). Order 8 is built by vertex augmentation:
every 8-vertex graph arises from some 7-vertex graph by adding one vertex
joined to a neighbor subset, so augmenting all 1044 order-7 graphs with
all 128 subsets and de-duplicating up to isomorphism is exhaustive.
De-duplication buckets candidates by Weisfeiler-Lehman hash, then settles
collisions with VF2.

Expected class counts (graphs on n unlabeled vertices):
    n=4: 11   n=5: 34   n=6: 156   n=7: 1044   n=8: 12346

Records are written one per line, graph6, sorted, no header. Rerunning
must reproduce the committed files byte for byte.
"""

from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from networkx.generators.atlas import graph_atlas_g

EXPECTED = {4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
OUT_DIR = Path(__file__).resolve().parent.parent / "data" / "corpora"


def g6(graph: nx.Graph) -> bytes:
    return nx.to_graph6_bytes(graph, header=False).strip()


def atlas_by_order() -> dict[int, list[nx.Graph]]:
    by_order: dict[int, list[nx.Graph]] = {n: [] for n in range(4, 8)}
    for graph in graph_atlas_g():
        n = graph.number_of_nodes()
        if 4 <= n <= 7:
            by_order[n].append(nx.convert_node_labels_to_integers(graph))
    return by_order


def augment_order8(order7: list[nx.Graph]) -> list[nx.Graph]:
    buckets: dict[str, list[nx.Graph]] = {}
    kept: list[nx.Graph] = []
    candidates = 0
    for base in order7:
        for k in range(8):
            for subset in combinations(range(7), k):
                candidates += 1
                h = base.copy()
                h.add_node(7)
                h.add_edges_from((7, v) for v in subset)
                key = nx.weisfeiler_lehman_graph_hash(h)
                bucket = buckets.setdefault(key, [])
                if any(GraphMatcher(h, seen).is_isomorphic() for seen in bucket):
                    continue
                bucket.append(h)
                kept.append(h)
        if len(kept) % 1000 < 128:
            print(f"  ... {candidates} candidates, {len(kept)} classes", file=sys.stderr)
    print(f"order 8: {candidates} candidates -> {len(kept)} classes", file=sys.stderr)
    return kept


def main() -> int:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    corpora = atlas_by_order()
    corpora[8] = augment_order8(corpora[7])
    for n in sorted(corpora):
        records = sorted(g6(g) for g in corpora[n])
        if len(records) != EXPECTED[n]:
            print(f"ERROR: order {n}: got {len(records)} classes, "
                  f"expected {EXPECTED[n]}", file=sys.stderr)
            return 1
        if len(set(records)) != len(records):
            print(f"ERROR: order {n}: duplicate graph6 records", file=sys.stderr)
            return 1
        path = OUT_DIR / f"order{n}.g6"
        path.write_bytes(b"\n".join(records) + b"\n")
        print(f"wrote {path} ({len(records)} records)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
