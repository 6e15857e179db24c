"""Deterministic families of 3-connected planar graphs with their faces."""

from __future__ import annotations

import string

from .graph import FaceStructure, Graph, GraphError

FAMILIES = ("wheel", "prism", "grid_triangulated")


def _names(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_uppercase[:n])
    return [f"v{i}" for i in range(n)]


def wheel(k: int) -> tuple[Graph, FaceStructure]:
    """Rim cycle of ``k`` vertices plus a hub; the rim is the outer face."""
    if k < 3:
        raise GraphError("wheel needs a rim of at least 3 vertices")
    names = _names(k + 1)
    rim, hub = names[:k], names[k]
    edges = [(rim[i], rim[(i + 1) % k]) for i in range(k)]
    edges += [(r, hub) for r in rim]
    faces = [tuple(rim)]
    faces += [(hub, rim[(i + 1) % k], rim[i]) for i in range(k)]
    return Graph(tuple(names), tuple(edges)), FaceStructure(tuple(faces), 0)


def prism(k: int) -> tuple[Graph, FaceStructure]:
    """Two ``k``-cycles joined by spokes; prism(4) is the cube A..H with outer ABCD."""
    if k < 3:
        raise GraphError("prism needs cycles of at least 3 vertices")
    names = _names(2 * k)
    a, b = names[:k], names[k:]
    edges = [(a[i], a[(i + 1) % k]) for i in range(k)]
    edges += [(b[i], b[(i + 1) % k]) for i in range(k)]
    edges += [(a[i], b[i]) for i in range(k)]
    faces = [tuple(a), tuple(reversed(b))]
    for i in range(k):
        j = (i + 1) % k
        faces.append((a[j], a[i], b[i], b[j]))
    return Graph(tuple(names), tuple(edges)), FaceStructure(tuple(faces), 0)


def grid_triangulated(rows: int, cols: int) -> tuple[Graph, FaceStructure]:
    """``rows`` x ``cols`` grid with every cell split by a diagonal.

    Diagonals point towards the nearest corner so that no corner is left with
    degree 2 and the boundary cycle has no chords.
    """
    if rows < 3 or cols < 3:
        raise GraphError("triangulated grid needs at least 3 rows and 3 columns")
    names = _names(rows * cols)

    def at(i, j):
        return names[i * cols + j]

    edges = []
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((at(i, j), at(i, j + 1)))
            if i + 1 < rows:
                edges.append((at(i, j), at(i + 1, j)))
    faces = []
    for i in range(rows - 1):
        for j in range(cols - 1):
            # counterclockwise with x = column, y = row
            p00, p01, p10, p11 = at(i, j), at(i, j + 1), at(i + 1, j), at(i + 1, j + 1)
            main = (2 * i < rows - 2) == (2 * j < cols - 2)
            if main:
                edges.append((p00, p11))
                faces += [(p00, p01, p11), (p00, p11, p10)]
            else:
                edges.append((p01, p10))
                faces += [(p00, p01, p10), (p01, p11, p10)]
    boundary = [at(0, j) for j in range(cols)]
    boundary += [at(i, cols - 1) for i in range(1, rows)]
    boundary += [at(rows - 1, j) for j in range(cols - 2, -1, -1)]
    boundary += [at(i, 0) for i in range(rows - 2, 0, -1)]
    faces.insert(0, tuple(reversed(boundary)))
    return Graph(tuple(names), tuple(edges)), FaceStructure(tuple(faces), 0)


def generate(family: str, *params: int) -> tuple[Graph, FaceStructure]:
    if family == "wheel":
        return wheel(*params)
    if family == "prism":
        return prism(*params)
    if family in ("grid", "grid_triangulated"):
        return grid_triangulated(*params)
    raise GraphError(f"unknown family {family!r}; expected one of {FAMILIES}")


def cube() -> tuple[Graph, FaceStructure]:
    return prism(4)


def standard_corpus() -> list[tuple[str, Graph, FaceStructure]]:
    """Test corpus of named instances: wheels, prisms and triangulated grids.

    Prisms and wheels appear a second time with an inner face as the outer one.
    """
    corpus = []
    for k in range(4, 13):
        g, f = wheel(k)
        corpus.append((f"wheel({k})", g, f))
    for k in range(3, 9):
        g, f = prism(k)
        corpus.append((f"prism({k})", g, f))
    for r in range(3, 6):
        for c in range(3, 6):
            g, f = grid_triangulated(r, c)
            corpus.append((f"grid_triangulated({r},{c})", g, f))
    for k in range(3, 9):
        g, f = prism(k)
        corpus.append((f"prism({k})/side-outer", g, f.with_outer(2)))
    for k in range(4, 13):
        g, f = wheel(k)
        corpus.append((f"wheel({k})/triangle-outer", g, f.with_outer(1)))
    return corpus
