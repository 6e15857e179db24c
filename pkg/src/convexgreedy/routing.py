"""Greedy and beta-weak greedy path finding on an embedded graph.

Distances are always Euclidean distances between embedded vertices. Strict
comparisons use an absolute slack of ``EPS_TIE_REL * diameter``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from joblib import Parallel, delayed
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_embedding, check_positive, check_vertex
from .tutte import Embedding

EPS_TIE_REL = 1e-12

INCREASING = "increasing"
DECREASING = "decreasing"


@dataclass
class RoutePath:
    vertices: list[str]
    step_distances: list[float]
    target: str
    success: bool = True

    @property
    def hops(self) -> int:
        return len(self.vertices) - 1

    def weight(self, e: Embedding) -> float:
        return sum(e.distance(u, v) for u, v in zip(self.vertices, self.vertices[1:]))

    def to_dict(self) -> dict:
        return {"path": list(self.vertices), "distances": list(self.step_distances), "success": self.success}


@dataclass
class MonotoneRun:
    kind: str
    start_distance: float
    length: int
    ratio_bound: float
    start: int = 0

    @property
    def end(self) -> int:
        return self.start + self.length


@dataclass
class WeakGreedyTree:
    source: str
    beta: float
    edges: list[tuple[str, str]]
    parent: dict[str, str]
    h_edges: set[frozenset] = field(default_factory=set)
    violations: dict[str, list[int]] = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return not self.violations

    def path_to(self, t: str) -> list[str]:
        path = [t]
        while path[-1] != self.source:
            path.append(self.parent[path[-1]])
        return path[::-1]


@dataclass
class BetaProfile:
    per_source: dict[str, float]
    beta_max: float
    witness_trees: dict[str, WeakGreedyTree] = field(default_factory=dict)
    per_source_raw: dict[str, float] = field(default_factory=dict)
    critical_target: dict[str, str | None] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"beta_s": dict(self.per_source), "beta_max": self.beta_max}


# --------------------------------------------------------------------------
# helpers on dense indices

def _tie_eps(e: Embedding) -> float:
    return EPS_TIE_REL * (e.scale or 1.0)


def _adjacency(e: Embedding) -> tuple[tuple[int, ...], ...]:
    return e.graph.adjacency


def _relation(e: Embedding, t: int, beta: float, strict: bool) -> list[list[int]]:
    """Successor lists of the target-specific relation u -> v."""
    d = e.distances[:, t]
    eps = _tie_eps(e)
    adj = _adjacency(e)
    succ = []
    for u, nbrs in enumerate(adj):
        if u == t:
            succ.append([])
        elif strict:
            bound = beta * d[u] - eps
            succ.append([v for v in nbrs if d[v] < bound])
        else:
            bound = beta * d[u] + eps
            succ.append([v for v in nbrs if d[v] <= bound])
    return succ


def _bfs(succ: list[list[int]], s: int) -> list[int | None]:
    """BFS parents (lowest index first); the root is its own parent."""
    parent: list[int | None] = [None] * len(succ)
    parent[s] = s
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in succ[u]:
            if parent[v] is None:
                parent[v] = u
                queue.append(v)
    return parent


def _reverse(succ):
    pred = [[] for _ in succ]
    for u, vs in enumerate(succ):
        for v in vs:
            pred[v].append(u)
    return pred


def _path_from_parents(parent, s, t):
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return path[::-1]


# --------------------------------------------------------------------------
# path finding

def greedy_route(e: Embedding, s: str, t: str) -> RoutePath:
    """Greedy forwarding: always step to the neighbour closest to ``t``.

    Ties go to the lower vertex index. Fails at the first vertex with no
    neighbour strictly closer to ``t``; the partial path is returned with
    ``success=False``.
    """
    g = e.graph
    s, t = check_vertex(g, s), check_vertex(g, t)
    idx = g.index
    ti = idx[t]
    d = e.distances[:, ti]
    eps = _tie_eps(e)
    adj = _adjacency(e)
    u = idx[s]
    path = [u]
    while u != ti:
        best = min(adj[u], key=lambda v: (d[v], v))
        if not d[best] < d[u] - eps:
            return RoutePath([g.vertex_ids[i] for i in path], [float(d[i]) for i in path], t, False)
        u = best
        path.append(u)
    return RoutePath([g.vertex_ids[i] for i in path], [float(d[i]) for i in path], t, True)


@dataclass
class WeakReach:
    reachable: bool
    edges: set[tuple[str, str]]

    def __bool__(self):
        return self.reachable


def weak_reachable(e: Embedding, s: str, t: str, beta: float, strict: bool = True) -> WeakReach:
    """Does every branch-exploring weak greedy search from ``s`` reach ``t``?

    Runs as reachability over u -> v with d(v,t) < beta * d(u,t). ``edges``
    holds the relation edges lying on some s -> t walk. ``strict=False`` uses
    ``<=`` (the closure used at the exact critical beta).
    """
    g = e.graph
    s, t = check_vertex(g, s), check_vertex(g, t)
    beta = check_positive(beta, "beta")
    idx = g.index
    si, ti = idx[s], idx[t]
    if si == ti:
        return WeakReach(True, set())
    succ = _relation(e, ti, beta, strict)
    fwd = _bfs(succ, si)
    if fwd[ti] is None:
        return WeakReach(False, set())
    bwd = _bfs(_reverse(succ), ti)
    ids = g.vertex_ids
    edges = {
        (ids[u], ids[v])
        for u, vs in enumerate(succ) if fwd[u] is not None
        for v in vs if bwd[v] is not None
    }
    return WeakReach(True, edges)


def weak_route(e: Embedding, s: str, t: str, beta: float, strict: bool = True) -> RoutePath:
    """One beta-weak greedy path (fewest hops, lowest index first) or a failure."""
    g = e.graph
    s, t = check_vertex(g, s), check_vertex(g, t)
    beta = check_positive(beta, "beta")
    idx = g.index
    si, ti = idx[s], idx[t]
    d = e.distances[:, ti]
    if si == ti:
        return RoutePath([s], [0.0], t, True)
    parent = _bfs(_relation(e, ti, beta, strict), si)
    if parent[ti] is None:
        return RoutePath([s], [float(d[si])], t, False)
    path = _path_from_parents(parent, si, ti)
    return RoutePath([g.vertex_ids[i] for i in path], [float(d[i]) for i in path], t, True)


# --------------------------------------------------------------------------
# optimal weakness parameters

def _edge_ratios(e: Embedding, ti: int) -> tuple[list[list[tuple[int, float]]], list[float]]:
    d = e.distances[:, ti]
    adj = _adjacency(e)
    ratios = []
    values = {1.0}
    for u, nbrs in enumerate(adj):
        if u == ti or d[u] <= 0:
            ratios.append([])
            continue
        row = [(v, float(d[v] / d[u])) for v in nbrs]
        ratios.append(row)
        values.update(r for _, r in row)
    return ratios, sorted(values)


def _reach_at(ratios, si, ti, r) -> bool:
    seen = {si}
    stack = [si]
    while stack:
        u = stack.pop()
        if u == ti:
            return True
        for v, q in ratios[u]:
            if q <= r and v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def beta_st(e: Embedding, s: str, t: str, clamp: bool = True) -> float:
    """Smallest weakness factor that lets ``s`` reach ``t``.

    This is the infimum over beta for which the strict search succeeds,
    found exactly as the least critical ratio d(v,t)/d(u,t) (edge ratios plus
    1) at which the non-strict search succeeds. Binary search is valid since
    reachability only grows with the ratio threshold. ``clamp`` lifts the
    result to at least 1.
    """
    g = e.graph
    s, t = check_vertex(g, s), check_vertex(g, t)
    si, ti = g.index[s], g.index[t]
    if si == ti:
        return 1.0 if clamp else 0.0
    ratios, crit = _edge_ratios(e, ti)
    if not _reach_at(ratios, si, ti, crit[-1]):
        raise RuntimeError(f"{t!r} is unreachable from {s!r}; graph is disconnected")
    lo, hi = 0, len(crit) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _reach_at(ratios, si, ti, crit[mid]):
            hi = mid
        else:
            lo = mid + 1
    value = crit[lo]
    return max(value, 1.0) if clamp else value


def _source_beta(e: Embedding, s: str) -> tuple[float, float, str | None]:
    raw, arg = -math.inf, None
    for t in e.graph.vertex_ids:
        if t == s:
            continue
        b = beta_st(e, s, t, clamp=False)
        if b > raw:
            raw, arg = b, t
    if arg is None:
        raw = 0.0
    return max(raw, 1.0), raw, arg


def beta_s(e: Embedding, s: str) -> float:
    """Worst critical ratio over all targets, clamped to at least 1."""
    check_embedding(e)
    s = check_vertex(e.graph, s)
    return _source_beta(e, s)[0]


def beta_max(e: Embedding, build_trees: bool = True, n_jobs: int | None = None) -> BetaProfile:
    check_embedding(e)
    ids = e.graph.vertex_ids
    if n_jobs in (None, 1):
        rows = [_source_beta(e, s) for s in ids]
    else:
        rows = Parallel(n_jobs=n_jobs, prefer="threads")(delayed(_source_beta)(e, s) for s in ids)
    per_source = {s: r[0] for s, r in zip(ids, rows)}
    profile = BetaProfile(
        per_source=per_source,
        beta_max=max(per_source.values()),
        per_source_raw={s: r[1] for s, r in zip(ids, rows)},
        critical_target={s: r[2] for s, r in zip(ids, rows)},
    )
    if build_trees:
        profile.witness_trees = {s: build_weak_tree(e, s, per_source[s]) for s in ids}
    return profile


def build_weak_tree(e: Embedding, s: str, beta: float) -> WeakGreedyTree:
    """Union of all beta-weak s->t walk edges (H), then a BFS spanning tree of H.

    Uses the non-strict relation so that ``beta`` may be exactly the critical
    value. Tree paths that are not themselves beta-weak greedy are listed in
    ``violations`` (target -> offending step indices) instead of raising.
    """
    g = e.graph
    s = check_vertex(g, s)
    beta = check_positive(beta, "beta")
    h: set[frozenset] = set()
    for t in g.vertex_ids:
        if t == s:
            continue
        reach = weak_reachable(e, s, t, beta, strict=False)
        if not reach:
            raise ValueError(f"beta too small: {t!r} unreachable from {s!r} at beta={beta}")
        h.update(frozenset(p) for p in reach.edges)

    idx = g.index
    h_adj = [[] for _ in g.vertex_ids]
    for key in h:
        u, v = tuple(key)
        h_adj[idx[u]].append(idx[v])
        h_adj[idx[v]].append(idx[u])
    for row in h_adj:
        row.sort()
    parent_idx = _bfs(h_adj, idx[s])
    ids = g.vertex_ids
    parent = {ids[v]: ids[p] for v, p in enumerate(parent_idx) if p is not None and v != idx[s]}
    edges = [(p, v) for v, p in parent.items()]
    tree = WeakGreedyTree(s, beta, edges, parent, h)

    eps = _tie_eps(e)
    for t in ids:
        if t == s:
            continue
        path = tree.path_to(t)
        bad = [
            j for j, (u, v) in enumerate(zip(path, path[1:]))
            if not e.distance(v, t) <= beta * e.distance(u, t) + eps
        ]
        if bad:
            tree.violations[t] = bad
    return tree


# --------------------------------------------------------------------------
# monotone runs and their weight bounds

def decompose_path(p: RoutePath | Sequence[float]) -> list[MonotoneRun]:
    """Split distances-to-target into maximal alternating monotone runs.

    A step with unchanged distance extends whichever run is open.
    """
    dist = list(p.step_distances if isinstance(p, RoutePath) else p)
    if len(dist) < 2:
        return []
    runs: list[MonotoneRun] = []
    start, kind = 0, None
    for j in range(1, len(dist)):
        step = dist[j] - dist[j - 1]
        direction = INCREASING if step > 0 else DECREASING if step < 0 else None
        if direction is None or kind is None or direction == kind:
            kind = kind or direction
            continue
        runs.append(_make_run(dist, start, j - 1, kind))
        start, kind = j - 1, direction
    runs.append(_make_run(dist, start, len(dist) - 1, kind or DECREASING))
    return runs


def _make_run(dist, start, end, kind) -> MonotoneRun:
    ratios = []
    for j in range(start + 1, end + 1):
        a, b = dist[j - 1], dist[j]
        if kind == INCREASING:
            ratios.append(b / a if a > 0 else math.inf)
        else:
            ratios.append(a / b if b > 0 else math.inf)
    return MonotoneRun(kind, float(dist[start]), end - start, max(ratios), start)


def run_bound_evaluators(run: MonotoneRun) -> tuple[float, float]:
    """Lower/upper weight bounds for one monotone run.

    Increasing, ratio b: d(b^k - 1) and d(b^k - 1)(b + 1)/(b - 1), the latter
    infinite unless b > 1. Decreasing, ratio g: d(1 - 1/g) and d k (1 + 1/g).
    """
    d, k, r = run.start_distance, run.length, run.ratio_bound
    if run.kind == INCREASING:
        grow = r ** k - 1 if math.isfinite(r) else math.inf
        lower = d * grow
        upper = d * grow * (r + 1) / (r - 1) if r > 1 and math.isfinite(r) else math.inf
        return lower, upper
    inv = 1.0 / r if r > 0 else math.inf
    return d * (1 - inv), d * k * (1 + inv)


def path_bound_evaluator(k: int, beta: float, d_min: float, d_max: float) -> tuple[float, float]:
    """Bounds on the weight of a k-hop beta-weak greedy path."""
    if k < 1:
        raise ValueError("path length k must be at least 1")
    lower = d_min * k * (beta - 1)
    if beta == 1:
        upper = 2 * d_max * k
    else:
        upper = 2 * d_max * (beta ** k - 1) / (beta - 1)
    return lower, upper


# --------------------------------------------------------------------------
# estimators

class GreedyRouter(BaseEstimator):
    """Route pairs on a fitted embedding.

    ``beta=None`` runs plain greedy forwarding; a number switches to beta-weak
    reachability. ``predict`` takes an (m, 2) array-like of vertex id pairs.
    """

    def __init__(self, beta=None):
        self.beta = beta

    def fit(self, embedding, y=None):
        self.embedding_ = check_embedding(embedding)
        self.vertex_ids_ = embedding.graph.vertex_ids
        return self

    def route(self, s, t) -> RoutePath:
        check_is_fitted(self, "embedding_")
        if self.beta is None:
            return greedy_route(self.embedding_, s, t)
        return weak_route(self.embedding_, s, t, self.beta)

    def predict(self, pairs) -> np.ndarray:
        check_is_fitted(self, "embedding_")
        pairs = _check_pairs(pairs)
        if self.beta is None:
            return np.array([greedy_route(self.embedding_, s, t).success for s, t in pairs], dtype=bool)
        return np.array([bool(weak_reachable(self.embedding_, s, t, self.beta)) for s, t in pairs], dtype=bool)


class BetaProfiler(BaseEstimator):
    """Fit per-source optimal weakness factors; ``predict`` gives per-pair values."""

    def __init__(self, build_trees=True, n_jobs=None):
        self.build_trees = build_trees
        self.n_jobs = n_jobs

    def fit(self, embedding, y=None):
        check_embedding(embedding)
        self.embedding_ = embedding
        self.profile_ = beta_max(embedding, build_trees=self.build_trees, n_jobs=self.n_jobs)
        self.beta_s_ = self.profile_.per_source
        self.beta_max_ = self.profile_.beta_max
        return self

    def predict(self, pairs) -> np.ndarray:
        check_is_fitted(self, "profile_")
        return np.array([beta_st(self.embedding_, s, t) for s, t in _check_pairs(pairs)])


def _check_pairs(pairs) -> list[tuple[str, str]]:
    out = []
    for row in pairs:
        if len(row) != 2:
            raise ValueError(f"expected (source, target) pairs, got {row!r}")
        out.append((str(row[0]), str(row[1])))
    return out


def all_pairs(e: Embedding) -> list[tuple[str, str]]:
    ids = e.graph.vertex_ids
    return [(s, t) for s in ids for t in ids if s != t]


def is_greedy_embedding(e: Embedding) -> bool:
    """Greedy forwarding succeeds for every ordered pair."""
    return all(greedy_route(e, s, t).success for s, t in all_pairs(e))


def critical_ratios(e: Embedding, t: str) -> list[float]:
    """Sorted candidate set for :func:`beta_st` with target ``t``."""
    return _edge_ratios(e, e.graph.index[check_vertex(e.graph, t)])[1]


__all__ = [
    "RoutePath", "MonotoneRun", "WeakGreedyTree", "BetaProfile", "WeakReach",
    "greedy_route", "weak_reachable", "weak_route", "beta_st", "beta_s", "beta_max",
    "build_weak_tree", "decompose_path", "run_bound_evaluators", "path_bound_evaluator",
    "GreedyRouter", "BetaProfiler", "all_pairs", "is_greedy_embedding", "critical_ratios",
]
