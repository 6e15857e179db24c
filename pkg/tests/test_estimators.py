import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from convexgreedy import BetaProfiler, BoundsAnalyzer, GreedyRouter, TutteEmbedder


@pytest.mark.parametrize("est", [
    TutteEmbedder(radius=2.0), GreedyRouter(beta=1.5), BetaProfiler(build_trees=False, n_jobs=2),
    BoundsAnalyzer(deltas=(0.5,)),
])
def test_params_and_clone(est):
    params = est.get_params()
    twin = clone(est)
    assert twin.get_params() == params
    assert twin is not est


@pytest.mark.parametrize("est, call", [
    (GreedyRouter(), lambda e: e.predict([("A", "B")])),
    (BetaProfiler(), lambda e: e.predict([("A", "B")])),
    (BoundsAnalyzer(), lambda e: e.predict()),
    (TutteEmbedder(), lambda e: e.transform()),
])
def test_unfitted(est, call):
    with pytest.raises(NotFittedError):
        call(est)


def test_router_predict(cube_weak):
    pairs = np.array([["B", "D"], ["A", "C"]])
    assert GreedyRouter().fit(cube_weak).predict(pairs).tolist() == [False, True]
    big = BetaProfiler(build_trees=False).fit(cube_weak).beta_max_
    assert GreedyRouter(beta=big * 1.01).fit(cube_weak).predict(pairs).all()


def test_router_rejects_bad_pairs(cube_emb):
    with pytest.raises(ValueError):
        GreedyRouter().fit(cube_emb).predict([("A", "B", "C")])


def test_fit_rejects_non_embedding():
    with pytest.raises(TypeError):
        GreedyRouter().fit(np.zeros((3, 2)))


def test_profiler(cube_weak):
    prof = BetaProfiler(build_trees=False).fit(cube_weak)
    assert prof.beta_s_["B"] > 1
    assert prof.predict([("B", "D")])[0] > 1


def test_set_params():
    est = TutteEmbedder().set_params(radius=3.0)
    assert est.radius == 3.0
