"""Cube spring-weight sweep: weaken the spokes BF and DH and watch greedy routing break."""

from __future__ import annotations

import numpy as np

from .bounds import certify_ratio
from .generators import cube
from .routing import beta_max, beta_s, greedy_route, weak_reachable
from .trees import embedding_metrics
from .tutte import Embedding, tutte_embed

SQUARE = ((1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0))
CSV_COLUMNS = ("w", "beta_max", "d_ratio", "greedy_BD", "ratio", "implied_delta")
# B and D sit on the nailed square's inside so that weakening BF and DH pulls
# them together; with ABCD nailed the pair B, D stays trivially greedy via A.
DEFAULT_OUTER = ("E", "F", "G", "H")


def cube_embedding(w: float = 1.0, outer=DEFAULT_OUTER) -> Embedding:
    g, f = cube()
    if w != 1.0:
        g = g.with_weights({("B", "F"): w, ("D", "H"): w})
    f = f.with_outer(tuple(outer))
    return tutte_embed(g, f, outer_positions=dict(zip(outer, SQUARE)))


def geometric_sweep(lo: float = 1e-3, hi: float = 1.0, steps: int = 13) -> list[float]:
    """Weights from ``hi`` down to ``lo``, evenly spaced in log scale."""
    return [float(w) for w in np.geomspace(hi, lo, steps)]


def cube_row(w: float, outer=DEFAULT_OUTER) -> dict:
    e = cube_embedding(w, outer)
    profile = beta_max(e, build_trees=False)
    summary = embedding_metrics(e)
    verdict = certify_ratio(summary, 1.0)
    bb = beta_s(e, "B")
    return {
        "w": w,
        "beta_max": profile.beta_max,
        "d_ratio": summary.d_ratio,
        "greedy_BD": greedy_route(e, "B", "D").success,
        "ratio": verdict.ratio,
        "implied_delta": verdict.implied_delta,
        "beta_B": bb,
        "weak_BD": bool(weak_reachable(e, "B", "D", bb, strict=False)),
        "d_ratio_pair": summary.d_ratio_pair,
    }


def cube_sweep(weights, outer=DEFAULT_OUTER) -> list[dict]:
    return [cube_row(w, outer) for w in weights]
