import math

import pytest

from convexgreedy import cube, standard_corpus, tutte_embed
from convexgreedy.experiments import cube_embedding

SQUARE_ABCD = {"A": (1.0, 1.0), "B": (-1.0, 1.0), "C": (-1.0, -1.0), "D": (1.0, -1.0)}


@pytest.fixture(scope="session")
def cube_graph():
    return cube()


@pytest.fixture(scope="session")
def cube_emb(cube_graph):
    """Equal-weight cube, outer ABCD nailed to (+-1, +-1)."""
    g, f = cube_graph
    return tutte_embed(g, f, outer_positions=SQUARE_ABCD)


@pytest.fixture(scope="session")
def cube_weak():
    """Cube with w(BF) = w(DH) = 0.01 and EFGH nailed, so B and D sit inside."""
    return cube_embedding(0.01)


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def corpus_embeddings(corpus):
    return [(name, tutte_embed(g, f)) for name, g, f in corpus]


@pytest.fixture(scope="session")
def small_corpus_embeddings(corpus_embeddings):
    return [(name, e) for name, e in corpus_embeddings if e.graph.n <= 10]


def unit_square_c4():
    from convexgreedy import Embedding, Graph

    g = Graph(tuple("ABCD"), (("A", "B"), ("B", "C"), ("C", "D"), ("D", "A")))
    return Embedding.from_mapping(g, {"A": (0, 0), "B": (1, 0), "C": (1, 1), "D": (0, 1)})


SQRT2 = math.sqrt(2)
