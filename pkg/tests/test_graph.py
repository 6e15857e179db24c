import json

import pytest

from convexgreedy import FaceStructure, Graph, GraphError, dump_graph, load_graph
from convexgreedy.graph import (
    DanglingEndpointError,
    DuplicateEdgeError,
    EmptyGraphError,
    GraphParseError,
    NonPositiveWeightError,
    SelfLoopError,
    validate_faces,
    validate_three_connected,
)
from oracles import brute_force_separators

K4_DOC = {"vertices": ["1", "2", "3", "4"],
          "edges": [["1", "2"], ["1", "3"], ["1", "4"], ["2", "3"], ["2", "4"], ["3", "4"]]}
C4 = Graph(tuple("ABCD"), (("A", "B"), ("B", "C"), ("C", "D"), ("D", "A")))


def test_cube_document_loads(cube_graph):
    g, f = cube_graph
    g2, f2 = load_graph(dump_graph(g, f))
    assert g2.n == 8 and len(g2.edges) == 12 and len(f2.faces) == 6
    assert g2 == g and f2 == f


def test_k4_without_faces():
    g, f = load_graph(K4_DOC)
    assert g.n == 4 and f is None


def test_weights_round_trip():
    doc = dict(K4_DOC, edges=K4_DOC["edges"][:-1] + [["3", "4", 0.25]])
    g, _ = load_graph(json.dumps(doc))
    assert g.weight("4", "3") == 0.25
    assert g.weight("1", "2") == 1.0
    assert load_graph(dump_graph(g))[0].weight("3", "4") == 0.25


@pytest.mark.parametrize("doc, exc, msg", [
    ({"vertices": [], "edges": []}, EmptyGraphError, "empty graph"),
    ({"edges": []}, GraphParseError, "vertices"),
    ({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]}, DuplicateEdgeError, "duplicate"),
    ({"vertices": ["a", "b"], "edges": [["a", "c"]]}, DanglingEndpointError, "'c'"),
    ({"vertices": ["a", "b"], "edges": [["a", "b", 0]]}, NonPositiveWeightError, "non-positive"),
    ({"vertices": ["a", "b"], "edges": [["a", "b", -1.5]]}, NonPositiveWeightError, "non-positive"),
    ({"vertices": ["a"], "edges": [["a", "a"]]}, SelfLoopError, "self-loop"),
    ({"vertices": ["a", "b"], "edges": [["a"]]}, GraphParseError, "malformed"),
    ({"vertices": ["a", "b"], "edges": [["a", "b", "x"]]}, GraphParseError, "non-numeric"),
])
def test_load_errors(doc, exc, msg):
    with pytest.raises(exc, match=msg):
        load_graph(doc)


def test_bad_json_text():
    with pytest.raises(GraphParseError, match="invalid JSON"):
        load_graph("{not json")
    assert issubclass(GraphParseError, GraphError)


def test_neighbors_sorted_by_index():
    g = Graph(("z", "a", "m"), (("m", "z"), ("a", "m")))
    assert g.neighbors("m") == ("z", "a")


def test_with_weights_rejects_non_edges():
    with pytest.raises(DanglingEndpointError):
        C4.with_weights({("A", "C"): 2.0})


def test_k4_three_connected():
    g, _ = load_graph(K4_DOC)
    assert validate_three_connected(g)


def test_cube_three_connected(cube_graph):
    assert validate_three_connected(cube_graph[0]).three_connected


def test_c4_witness_is_opposite_pair():
    res = validate_three_connected(C4)
    assert not res
    assert set(res.separator) in ({"A", "C"}, {"B", "D"})
    assert tuple(res.separator) in brute_force_separators(C4)


def test_too_small():
    with pytest.raises(GraphError, match="too small"):
        validate_three_connected(Graph(("a", "b", "c"), (("a", "b"), ("b", "c"), ("a", "c"))))


def test_disconnected_graph():
    g = Graph(tuple("abcdefgh"), tuple((x, y) for grp in ("abcd", "efgh")
                                        for i, x in enumerate(grp) for y in grp[i + 1:]))
    res = validate_three_connected(g)
    assert not res and res.separator == ()


def test_connectivity_agrees_with_brute_force(corpus):
    for name, g, _ in corpus:
        if g.n <= 12:
            assert bool(validate_three_connected(g)) == (not brute_force_separators(g)), name


def test_cube_faces_valid(cube_graph):
    assert validate_faces(*cube_graph)


def test_cube_missing_face(cube_graph):
    g, f = cube_graph
    res = validate_faces(g, FaceStructure(f.faces[:-1], 0))
    assert not res
    assert any("in one face only" in d for d in res.diagnostics)


def test_k4_faces_euler():
    g, _ = load_graph(K4_DOC)
    f = FaceStructure((("2", "3", "4"), ("1", "2", "3"), ("1", "2", "4"), ("1", "3", "4")), 0)
    assert validate_faces(g, f)
    assert g.n - len(g.edges) + len(f.faces) == 2


def test_face_non_edge_reported():
    res = validate_faces(C4, FaceStructure((("A", "B", "C"), ("A", "C", "D")), 0))
    assert any("non-edge" in d for d in res.diagnostics)


def test_face_lookup_any_rotation(cube_graph):
    _, f = cube_graph
    i = f.find(("C", "B", "A", "D"))
    assert set(f.faces[i]) == set("ABCD")
    assert f.with_outer(("B", "C", "D", "A")).outer_face_index == i
    with pytest.raises(KeyError):
        f.find(("A", "C", "E"))
