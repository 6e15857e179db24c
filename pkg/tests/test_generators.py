import pytest

from convexgreedy import generate, grid_triangulated, prism, standard_corpus, validate_faces, validate_three_connected, wheel
from convexgreedy.graph import edge_key
from oracles import brute_force_separators


def _edge_set(g):
    return {edge_key(u, v) for u, v in g.edges}


def test_prism4_is_the_cube():
    g, f = prism(4)
    assert g.vertex_ids == tuple("ABCDEFGH")
    assert set(f.outer_face) == set("ABCD")
    spokes = {edge_key(a, b) for a, b in zip("ABCD", "EFGH")}
    assert spokes <= _edge_set(g)
    assert len(g.edges) == 12 and len(f.faces) == 6


def test_wheel3_is_k4():
    g, _ = wheel(3)
    assert g.n == 4 and len(g.edges) == 6


def test_grid_3x3_three_connected():
    g, f = grid_triangulated(3, 3)
    assert g.n == 9
    assert validate_three_connected(g)
    assert not brute_force_separators(g)
    assert validate_faces(g, f)


@pytest.mark.parametrize("family, params, n, m", [
    ("wheel", (7,), 8, 14),
    ("prism", (5,), 10, 15),
    ("grid", (4, 5), 20, 4 * 4 + 5 * 3 + 3 * 4),  # rows, columns, one diagonal per cell
])
def test_sizes(family, params, n, m):
    g, f = generate(family, *params)
    assert g.n == n
    assert len(g.edges) == m
    assert g.n - len(g.edges) + len(f.faces) == 2


def test_unknown_family():
    with pytest.raises(ValueError):
        generate("torus", 3)


def test_corpus_is_valid():
    corpus = standard_corpus()
    assert len(corpus) >= 30
    assert len({name for name, _, _ in corpus}) == len(corpus)
    for name, g, f in corpus:
        assert validate_three_connected(g), name
        assert validate_faces(g, f), name
