"""Spanning-tree weights under Euclidean edge lengths and embedding metrics."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from itertools import combinations

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .graph import Graph
from .tutte import Embedding


class DisconnectedGraphError(ValueError):
    pass


def _kruskal(vertices, weighted_edges, maximize=False):
    # weighted_edges: list of (weight, position, u, v); position breaks ties
    order = sorted(weighted_edges, key=lambda t: ((-t[0] if maximize else t[0]), t[1]))
    ds = DisjointSet(vertices)
    chosen, weights = [], []
    for w, _, u, v in order:
        if ds.merge(u, v):
            chosen.append((u, v))
            weights.append(w)
            if len(chosen) == len(vertices) - 1:
                break
    if len(chosen) != len(vertices) - 1:
        raise DisconnectedGraphError("graph is disconnected")
    return math.fsum(weights), chosen


def _graph_edges(e: Embedding, g: Graph):
    return [(e.distance(u, v), i, u, v) for i, (u, v) in enumerate(g.edges)]


def mst_weight(e: Embedding, g: Graph | None = None) -> tuple[float, list[tuple[str, str]]]:
    """Minimum spanning tree of the graph edges (Kruskal, ties by edge position)."""
    g = e.graph if g is None else g
    return _kruskal(list(g.vertex_ids), _graph_edges(e, g))


def max_spanning_tree_weight(e: Embedding, g: Graph | None = None) -> tuple[float, list[tuple[str, str]]]:
    g = e.graph if g is None else g
    return _kruskal(list(g.vertex_ids), _graph_edges(e, g), maximize=True)


def emst_weight(e: Embedding) -> tuple[float, list[tuple[str, str]]]:
    """Euclidean MST over the complete graph on the embedded points."""
    ids = e.graph.vertex_ids
    pairs = [(e.distance(u, v), k, u, v) for k, (u, v) in enumerate(combinations(ids, 2))]
    return _kruskal(list(ids), pairs)


def tree_weight(e: Embedding, edges) -> float:
    return math.fsum(e.distance(u, v) for u, v in edges)


@dataclass
class TreeWeightSummary:
    n: int
    wt_mst: float
    wt_max_st: float
    wt_emst: float
    d_max: float
    d_min_edge: float
    d_min_pair: float
    d_ratio: float
    d_ratio_pair: float

    def to_dict(self) -> dict:
        return asdict(self)


def embedding_metrics(e: Embedding, g: Graph | None = None) -> TreeWeightSummary:
    """Tree weights plus diameter and both readings of the minimum distance.

    ``d_ratio`` divides by the shortest edge; ``d_ratio_pair`` by the closest
    vertex pair.
    """
    g = e.graph if g is None else g
    d = e.distances
    n = g.n
    off = d[~np.eye(n, dtype=bool)] if n > 1 else d.ravel()
    d_max = float(off.max()) if off.size else 0.0
    d_min_pair = float(off.min()) if off.size else 0.0
    d_min_edge = min((e.distance(u, v) for u, v in g.edges), default=0.0)
    return TreeWeightSummary(
        n=n,
        wt_mst=mst_weight(e, g)[0],
        wt_max_st=max_spanning_tree_weight(e, g)[0],
        wt_emst=emst_weight(e)[0],
        d_max=d_max,
        d_min_edge=d_min_edge,
        d_min_pair=d_min_pair,
        d_ratio=d_max / d_min_edge if d_min_edge > 0 else math.inf,
        d_ratio_pair=d_max / d_min_pair if d_min_pair > 0 else math.inf,
    )

