"""Evaluate the spanning-tree and weakness-factor inequalities on an embedding.

Failed inequalities are findings recorded in the report, never exceptions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_embedding
from .graph import FaceStructure, Graph
from .routing import BetaProfile, WeakGreedyTree, beta_max as compute_beta_max, is_greedy_embedding
from .trees import TreeWeightSummary, embedding_metrics, tree_weight
from .tutte import Embedding

SQRT2 = math.sqrt(2.0)
DEFAULT_DELTAS = (0.1, 0.25, 0.5, 0.75, 1.0)
# relative slack so that equality cases (e.g. EMST == d_max for two points) pass
REL_TOL = 1e-12


def _le(a: float, b: float) -> bool:
    return a <= b + REL_TOL * max(abs(a), abs(b), 1.0)


@dataclass
class CheckRecord:
    name: str
    lhs: float
    rhs: float
    passed: bool
    values: dict = field(default_factory=dict)
    scale_invariant: bool = True

    def to_dict(self) -> dict:
        doc = {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "pass": self.passed}
        doc.update(self.values)
        if not self.scale_invariant:
            doc["scale_invariant"] = False
        return doc


@dataclass
class RatioVerdict:
    ratio: float
    implied_delta: float
    delta: float
    threshold: float
    passed: bool
    greedy: bool | None = None

    @property
    def criterion_holds(self) -> bool:
        """Some delta in (0, 1] satisfies the ratio bound."""
        return self.implied_delta > 0

    @property
    def agrees(self) -> bool | None:
        if self.greedy is None:
            return None
        return self.criterion_holds == self.greedy


def check_lemma3(summary: TreeWeightSummary, wt_max_st: float | None = None) -> CheckRecord:
    """Any spanning tree weighs at most sqrt(2) (n-1) d_max; tested on the heaviest one."""
    lhs = summary.wt_max_st if wt_max_st is None else wt_max_st
    rhs = SQRT2 * (summary.n - 1) * summary.d_max
    return CheckRecord("lemma3", lhs, rhs, _le(lhs, rhs))


def check_lemma8(summary: TreeWeightSummary) -> CheckRecord:
    ok = _le(summary.wt_emst, summary.wt_mst) and _le(summary.d_max, summary.wt_emst)
    return CheckRecord("lemma8", summary.wt_mst, summary.d_max, ok,
                       {"wt_mst": summary.wt_mst, "wt_emst": summary.wt_emst, "d_max": summary.d_max})


def check_lmstub(summary: TreeWeightSummary) -> CheckRecord:
    """WT(MST) <= 2.5 d_max^2. Length against squared length: depends on units."""
    rhs = 2.5 * summary.d_max ** 2
    return CheckRecord("lmstub", summary.wt_mst, rhs, _le(summary.wt_mst, rhs), scale_invariant=False)


def lemma7_bounds(summary: TreeWeightSummary, beta_max: float) -> tuple[float, float]:
    k = summary.n - 1
    if beta_max == 1:
        return 0.0, 2 * summary.d_max * k
    lower = summary.d_min_edge * (beta_max - 1) * k
    upper = 2 * summary.d_max * (beta_max ** k - 1) / (beta_max - 1)
    return lower, upper


def check_lemma7(summary: TreeWeightSummary, tree: WeakGreedyTree | float, beta_max: float,
                 embedding: Embedding | None = None) -> CheckRecord:
    if isinstance(tree, WeakGreedyTree):
        if embedding is None:
            raise ValueError("embedding is required to weigh a WeakGreedyTree")
        measured = tree_weight(embedding, tree.edges)
        source = tree.source
    else:
        measured, source = float(tree), None
    lower, upper = lemma7_bounds(summary, beta_max)
    values = {"lower": lower, "measured": measured, "upper": upper}
    if source is not None:
        values["source"] = source
    return CheckRecord("lemma7", lower, upper, _le(lower, measured) and _le(measured, upper), values)


def check_theorem3(summary: TreeWeightSummary, beta_max: float) -> CheckRecord:
    """1 <= beta_max <= 2 sqrt(2) d(G), with d(G) over the shortest edge."""
    rhs = 2 * SQRT2 * summary.d_ratio
    return CheckRecord("theorem3", beta_max, rhs, _le(1.0, beta_max) and _le(beta_max, rhs),
                       {"rhs_pair_reading": 2 * SQRT2 * summary.d_ratio_pair})


def check_chain(summary: TreeWeightSummary, tree_weights: dict[str, float]) -> CheckRecord:
    lo, hi = min(tree_weights.values()), max(tree_weights.values())
    ok = (_le(summary.wt_emst, summary.wt_mst) and _le(summary.wt_mst, lo) and _le(hi, summary.wt_max_st))
    return CheckRecord("chain", summary.wt_mst, summary.wt_max_st, ok,
                       {"wt_emst": summary.wt_emst, "wt_ts_min": lo, "wt_ts_max": hi})


def implied_delta(ratio: float, n: int) -> float:
    return 1.0 - math.log(ratio) / math.log(n - 1)


def certify_ratio(summary: TreeWeightSummary, delta: float, greedy: bool | None = None) -> RatioVerdict:
    """Test WT(maxST)/WT(MST) <= (n-1)^(1-delta) and report the delta the data implies."""
    if not 0 < delta <= 1:
        raise ValueError("delta must lie in (0, 1]")
    if summary.n < 3:
        raise ValueError("ratio criterion needs at least 3 vertices")
    if summary.wt_mst <= 0:
        raise ValueError("minimum spanning tree has zero weight")
    ratio = summary.wt_max_st / summary.wt_mst
    threshold = (summary.n - 1) ** (1 - delta)
    return RatioVerdict(ratio, implied_delta(ratio, summary.n), delta, threshold,
                        _le(ratio, threshold), greedy)


@dataclass
class BoundsReport:
    summary: TreeWeightSummary
    profile: BetaProfile
    checks: list[CheckRecord]
    lemma7_per_source: list[CheckRecord]
    ratio: list[RatioVerdict]
    greedy: bool
    notes: list[str] = field(default_factory=list)

    def check(self, name: str) -> CheckRecord:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def beta_max(self) -> float:
        return self.profile.beta_max

    @property
    def ratio_value(self) -> float:
        return self.ratio[0].ratio if self.ratio else math.nan

    @property
    def implied_delta(self) -> float:
        return self.ratio[0].implied_delta if self.ratio else math.nan

    def to_dict(self) -> dict:
        first = self.ratio[0] if self.ratio else None
        return {
            "checks": [c.to_dict() for c in self.checks],
            "ratio": {
                "ratio": first.ratio if first else None,
                "implied_delta": first.implied_delta if first else None,
                "greedy": self.greedy,
                "criterion_holds": first.criterion_holds if first else None,
                "agrees": first.agrees if first else None,
                "deltas": [{"delta": r.delta, "threshold": r.threshold, "pass": r.passed} for r in self.ratio],
            },
            "beta": self.profile.to_dict(),
            "summary": self.summary.to_dict(),
            "notes": list(self.notes),
        }


def full_report(g: Graph | None, f: FaceStructure | None, e: Embedding,
                deltas=DEFAULT_DELTAS, profile: BetaProfile | None = None) -> BoundsReport:
    """Run every checker on one embedding."""
    check_embedding(e)
    g = e.graph if g is None else g
    summary = embedding_metrics(e, g)
    if profile is None:
        profile = compute_beta_max(e, build_trees=True)
    greedy = is_greedy_embedding(e)
    notes = []

    tree_weights = {s: tree_weight(e, t.edges) for s, t in profile.witness_trees.items()}
    per_source = [check_lemma7(summary, tree_weights[s], profile.beta_max) for s in tree_weights]
    for s, rec in zip(tree_weights, per_source):
        rec.values["source"] = s
    if per_source:
        worst = next((r for r in per_source if not r.passed), per_source[0])
        lemma7 = CheckRecord("lemma7", worst.lhs, worst.rhs, all(r.passed for r in per_source),
                             {"lower": worst.lhs, "upper": worst.rhs,
                              "measured_min": min(tree_weights.values()),
                              "measured_max": max(tree_weights.values())})
    else:
        lemma7 = CheckRecord("lemma7", 0.0, 0.0, True)

    checks = [check_lemma3(summary), check_lemma8(summary), check_lmstub(summary), lemma7,
              check_theorem3(summary, profile.beta_max)]
    if tree_weights:
        checks.append(check_chain(summary, tree_weights))

    ratio = []
    if summary.n >= 3:
        ratio = [certify_ratio(summary, d, greedy) for d in deltas]

    for c in checks:
        if not c.passed:
            notes.append(f"{c.name} violated: lhs={c.lhs!r} rhs={c.rhs!r}")
    notes.append("lmstub compares a length with a squared length; its verdict changes under rescaling")
    if summary.d_ratio_pair != summary.d_ratio:
        notes.append("theorem3 uses d(G) over the shortest edge; "
                     f"closest-pair reading gives bound {2 * SQRT2 * summary.d_ratio_pair!r}")
    bad_trees = {s: sorted(t.violations) for s, t in profile.witness_trees.items() if t.violations}
    if bad_trees:
        notes.append(f"weak greedy trees with non-weak-greedy tree paths: {bad_trees}")
    if ratio and ratio[0].agrees is False:
        notes.append(f"ratio criterion ({'holds' if ratio[0].criterion_holds else 'fails'}) "
                     f"disagrees with direct greedy verdict ({greedy}) at n={summary.n}")
    if profile.beta_max == 1 and not greedy:
        notes.append("beta_max is 1 only as an infimum: some pair has ties but no strictly closer neighbour")
    return BoundsReport(summary, profile, checks, per_source, ratio, greedy, notes)


class BoundsAnalyzer(BaseEstimator):
    """``fit(embedding)`` builds the full :class:`BoundsReport` as ``report_``."""

    def __init__(self, deltas=DEFAULT_DELTAS):
        self.deltas = deltas

    def fit(self, embedding, y=None):
        check_embedding(embedding)
        self.report_ = full_report(embedding.graph, embedding.faces, embedding, deltas=self.deltas)
        self.beta_max_ = self.report_.beta_max
        self.implied_delta_ = self.report_.implied_delta
        return self

    def predict(self, X=None):
        """Pass/fail of each check, in report order."""
        check_is_fitted(self, "report_")
        return {c.name: c.passed for c in self.report_.checks}
