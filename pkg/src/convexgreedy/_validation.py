"""Input checks shared by the estimators and the functional API."""

from __future__ import annotations

import math

from .graph import FaceStructure, Graph


def check_graph(g) -> Graph:
    if not isinstance(g, Graph):
        raise TypeError(f"expected a Graph, got {type(g).__name__}")
    return g


def check_faces(f) -> FaceStructure:
    if not isinstance(f, FaceStructure):
        raise TypeError(f"expected a FaceStructure, got {type(f).__name__}")
    return f


def check_embedding(e):
    from .tutte import Embedding

    if not isinstance(e, Embedding):
        raise TypeError(f"expected an Embedding, got {type(e).__name__}")
    return e


def check_vertex(g: Graph, v) -> str:
    v = str(v)
    if v not in g.index:
        raise KeyError(f"unknown vertex {v!r}")
    return v


def check_positive(value, name: str) -> float:
    value = float(value)
    if not (value > 0 and math.isfinite(value)):
        raise ValueError(f"{name} must be a positive finite number, got {value}")
    return value
