import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexgreedy import (
    beta_max,
    beta_s,
    beta_st,
    build_weak_tree,
    decompose_path,
    greedy_route,
    path_bound_evaluator,
    run_bound_evaluators,
    tutte_embed,
    weak_reachable,
    weak_route,
    wheel,
)
from convexgreedy.routing import DECREASING, INCREASING, all_pairs, critical_ratios, is_greedy_embedding
from conftest import unit_square_c4
from oracles import critical_ratio_beta, weak_greedy_edges_by_paths


@pytest.fixture(scope="module")
def k4():
    return tutte_embed(*wheel(3))


# -- greedy forwarding ------------------------------------------------------

def test_cube_all_pairs_greedy(cube_emb):
    for s, t in all_pairs(cube_emb):
        p = greedy_route(cube_emb, s, t)
        assert p.success and p.vertices[0] == s and p.vertices[-1] == t
        assert all(a > b for a, b in zip(p.step_distances, p.step_distances[1:]))


def test_trivial_route(cube_emb):
    p = greedy_route(cube_emb, "C", "C")
    assert p.success and p.vertices == ["C"] and p.step_distances == [0.0]


def test_weakened_cube_fails_b_to_d(cube_weak):
    p = greedy_route(cube_weak, "B", "D")
    assert not p.success
    assert p.vertices[0] == "B" and p.vertices[-1] != "D"


def test_unknown_vertex(cube_emb):
    with pytest.raises(KeyError):
        greedy_route(cube_emb, "A", "Z")


# -- weak reachability ------------------------------------------------------

def test_adjacent_always_reachable(cube_emb):
    for beta in (0.01, 0.5, 1.0, 3.0):
        assert weak_reachable(cube_emb, "A", "B", beta)


def test_unit_square_half_beta():
    e = unit_square_c4()
    assert not weak_reachable(e, "A", "C", 0.5)
    assert weak_reachable(e, "A", "C", 1.0)
    assert not weak_route(e, "A", "C", 0.5).success


def test_cube_beta_one_all_pairs(cube_emb):
    assert all(weak_reachable(cube_emb, s, t, 1.0) for s, t in all_pairs(cube_emb))


def test_weak_route_respects_relation(cube_weak):
    b = beta_s(cube_weak, "B")
    p = weak_route(cube_weak, "B", "D", b, strict=False)
    assert p.success
    d = p.step_distances
    tol = 1e-12 * cube_weak.scale
    assert all(d[j + 1] <= b * d[j] + tol for j in range(len(d) - 1))


def test_beta_must_be_positive(cube_emb):
    with pytest.raises(ValueError):
        weak_reachable(cube_emb, "A", "C", 0.0)


def test_h_edges_cover_simple_paths(small_corpus_embeddings):
    for name, e in small_corpus_embeddings[:8]:
        for s, t in all_pairs(e)[::5]:
            b = beta_st(e, s, t)
            reach = weak_reachable(e, s, t, b, strict=False)
            assert weak_greedy_edges_by_paths(e, s, t, b) <= reach.edges, (name, s, t)


# -- optimal weakness -------------------------------------------------------

def test_beta_st_adjacent_clamped(cube_emb):
    assert beta_st(cube_emb, "A", "B") == 1.0
    assert beta_st(cube_emb, "A", "B", clamp=False) < 1.0


def test_k4(k4):
    assert all(beta_st(k4, s, t) == 1.0 for s, t in all_pairs(k4))
    assert all(beta_s(k4, s) == 1.0 for s in k4.graph.vertex_ids)
    assert beta_max(k4).beta_max == 1.0


def test_cube_beta_max(cube_emb):
    prof = beta_max(cube_emb)
    assert prof.beta_max == 1.0
    assert set(prof.per_source.values()) == {1.0}
    assert prof.to_dict()["beta_max"] == 1.0


def test_beta_grows_as_spokes_weaken():
    from convexgreedy.experiments import cube_embedding
    values = [beta_s(cube_embedding(w), "B") for w in (0.2, 0.05, 0.01, 0.002)]
    assert values[0] > 1
    assert all(a < b for a, b in zip(values, values[1:]))


def test_beta_st_matches_oracle(small_corpus_embeddings):
    for name, e in small_corpus_embeddings:
        for s, t in all_pairs(e):
            assert beta_st(e, s, t) == critical_ratio_beta(e, s, t), (name, s, t)
            assert beta_st(e, s, t, clamp=False) == critical_ratio_beta(e, s, t, clamp=False)


def test_beta_max_matches_oracle(small_corpus_embeddings):
    for name, e in small_corpus_embeddings:
        ref = max(critical_ratio_beta(e, s, t) for s, t in all_pairs(e))
        assert beta_max(e, build_trees=False).beta_max == ref, name


def test_beta_st_is_a_candidate(cube_weak):
    crit = critical_ratios(cube_weak, "D")
    assert beta_st(cube_weak, "B", "D", clamp=False) in crit
    assert crit == sorted(crit)


def test_parallel_beta_max(cube_weak):
    a = beta_max(cube_weak, build_trees=False)
    b = beta_max(cube_weak, build_trees=False, n_jobs=2)
    assert a.per_source == b.per_source


# -- weak greedy trees ------------------------------------------------------

def test_k4_tree(k4):
    for s in k4.graph.vertex_ids:
        tree = build_weak_tree(k4, s, 1.0)
        assert len(tree.edges) == 3 and tree.verified
        assert all(len(tree.path_to(t)) <= 2 for t in k4.graph.vertex_ids if t != s)


def test_cube_tree_paths_decrease(cube_emb):
    tree = build_weak_tree(cube_emb, "A", 1.0)
    assert len(tree.edges) == 7 and tree.verified
    for t in cube_emb.graph.vertex_ids:
        if t == "A":
            continue
        path = tree.path_to(t)
        d = [cube_emb.distance(v, t) for v in path]
        assert all(a > b for a, b in zip(d, d[1:]))


def test_tree_spans(cube_weak):
    prof = beta_max(cube_weak)
    for s, tree in prof.witness_trees.items():
        assert len(tree.edges) == 7
        assert set(tree.parent) == set(cube_weak.graph.vertex_ids) - {s}


def test_tree_beta_too_small(cube_weak):
    with pytest.raises(ValueError, match="beta too small"):
        build_weak_tree(cube_weak, "B", 1.0)


# -- monotone runs and bounds -----------------------------------------------

def _shape(runs):
    return [(r.kind, r.length) for r in runs]


def test_decompose_monotone():
    runs = decompose_path([3, 2, 1, 0])
    assert _shape(runs) == [(DECREASING, 3)]


def test_decompose_bump():
    assert _shape(decompose_path([1, 2, 1, 0])) == [(INCREASING, 1), (DECREASING, 2)]


def test_decompose_alternating():
    runs = decompose_path([2, 3, 4, 2, 3, 1, 0])
    assert _shape(runs) == [(INCREASING, 2), (DECREASING, 1), (INCREASING, 1), (DECREASING, 2)]
    assert [r.ratio_bound for r in runs] == [1.5, 2.0, 1.5, math.inf]
    assert [r.start_distance for r in runs] == [2, 4, 2, 3]


def test_decompose_route(cube_emb):
    p = greedy_route(cube_emb, "A", "G")
    assert [r.kind for r in decompose_path(p)] == [DECREASING]


distances = st.lists(st.floats(0.01, 100), min_size=2, max_size=20)


@settings(max_examples=200, deadline=None)
@given(distances)
def test_decomposition_tiles_path(d):
    runs = decompose_path(d)
    assert runs[0].start == 0 and runs[-1].end == len(d) - 1
    assert all(a.end == b.start for a, b in zip(runs, runs[1:]))
    assert all(a.kind != b.kind for a, b in zip(runs, runs[1:]))
    for r in runs:
        seg = d[r.start:r.end + 1]
        steps = [b - a for a, b in zip(seg, seg[1:])]
        assert all(x >= 0 for x in steps) if r.kind == INCREASING else all(x <= 0 for x in steps)


@settings(max_examples=100, deadline=None)
@given(distances, st.floats(0.1, 10))
def test_decomposition_scale_free(d, c):
    a, b = decompose_path(d), decompose_path([x * c for x in d])
    assert _shape(a) == _shape(b)
    assert all(math.isclose(x.ratio_bound, y.ratio_bound, rel_tol=1e-9) for x, y in zip(a, b))


def test_run_bounds_examples():
    from convexgreedy import MonotoneRun
    assert run_bound_evaluators(MonotoneRun(INCREASING, 1.0, 1, 2.0)) == (1.0, 3.0)
    assert run_bound_evaluators(MonotoneRun(DECREASING, 1.0, 1, 2.0)) == (0.5, 1.5)
    lo, _ = run_bound_evaluators(MonotoneRun(INCREASING, 1.0, 5, 1 + 1e-9))
    assert lo < 1e-7


def test_path_bounds():
    assert path_bound_evaluator(1, 2.0, 1.0, 1.0) == (1.0, 2.0)
    assert path_bound_evaluator(4, 1.0, 0.5, 2.0)[0] == 0.0
    with pytest.raises(ValueError):
        path_bound_evaluator(0, 2.0, 1.0, 1.0)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(0.1, 10), min_size=2, max_size=12))
def test_run_bounds_bracket_measured_length(d):
    """A run's distance change is a lower bound on the hops it needs to cover."""
    for r in decompose_path(d):
        lo, hi = run_bound_evaluators(r)
        assert lo <= hi
        change = abs(d[r.end] - d[r.start])
        assert change <= hi * (1 + 1e-9)


def test_greedy_iff_beta_one_everywhere(corpus_embeddings):
    for name, e in corpus_embeddings:
        pairs = all_pairs(e)
        greedy = [greedy_route(e, s, t).success for s, t in pairs]
        reach = [bool(weak_reachable(e, s, t, 1.0)) for s, t in pairs]
        assert all(greedy) == all(reach) == is_greedy_embedding(e), name
        assert all(r for g, r in zip(greedy, reach) if g), name
