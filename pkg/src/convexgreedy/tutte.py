"""Tutte rubber-band embedding and planarity/convexity validation."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_faces, check_graph, check_positive, check_vertex
from .geometry import is_convex_polygon, regular_polygon, segments_intersect
from .graph import FaceStructure, Graph, graph_to_dict, load_graph, validate_faces, validate_three_connected

EPS_EQ = 1e-8
EPS_COORD = 1e-12
EPS_AREA = 1e-12


class EmbeddingInputError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Embedding:
    """Vertex coordinates for a graph; row ``i`` of ``coords`` belongs to ``graph.vertex_ids[i]``."""

    graph: Graph
    coords: np.ndarray
    faces: FaceStructure | None = None

    def __post_init__(self):
        coords = np.array(self.coords, dtype=float)
        if coords.shape != (self.graph.n, 2):
            raise ValueError(f"coords must have shape ({self.graph.n}, 2), got {coords.shape}")
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_mapping(cls, graph: Graph, coords: Mapping[str, Sequence[float]],
                     faces: FaceStructure | None = None) -> "Embedding":
        missing = [v for v in graph.vertex_ids if v not in coords]
        if missing:
            raise ValueError(f"no coordinates for vertices {missing}")
        return cls(graph, np.array([coords[v] for v in graph.vertex_ids], dtype=float), faces)

    def __getitem__(self, v: str) -> np.ndarray:
        return self.coords[self.graph.index[v]]

    def as_dict(self) -> dict[str, list[float]]:
        return {v: [float(x), float(y)] for v, (x, y) in zip(self.graph.vertex_ids, self.coords)}

    @cached_property
    def distances(self) -> np.ndarray:
        """Full pairwise Euclidean distance matrix (index order)."""
        diff = self.coords[:, None, :] - self.coords[None, :, :]
        return np.sqrt((diff ** 2).sum(axis=-1))

    def distance(self, u: str, v: str) -> float:
        idx = self.graph.index
        return float(self.distances[idx[u], idx[v]])

    def edge_length(self, u: str, v: str) -> float:
        return self.distance(u, v)

    @cached_property
    def scale(self) -> float:
        """Largest pairwise distance, used to make tolerances relative."""
        return float(self.distances.max()) if self.graph.n > 1 else 0.0

    def scaled(self, c: float) -> "Embedding":
        return Embedding(self.graph, self.coords * c, self.faces)

    def to_dict(self, include_graph: bool = True) -> dict:
        doc = {"coords": self.as_dict()}
        if include_graph:
            doc["graph"] = graph_to_dict(self.graph, self.faces)
        return doc

    def dumps(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def loads(cls, document: str | Mapping, graph: Graph | None = None,
              faces: FaceStructure | None = None) -> "Embedding":
        if isinstance(document, (str, bytes)):
            document = json.loads(document)
        if graph is None:
            if "graph" not in document:
                raise ValueError("embedding document carries no graph and none was supplied")
            graph, faces = load_graph(document["graph"])
        return cls.from_mapping(graph, document["coords"], faces)


@dataclass
class ConvexityReport:
    planar: bool
    crossings: list[tuple[tuple[str, str], tuple[str, str]]]
    nonconvex_faces: list[int]
    equilibrium_residual: float
    coincident: list[tuple[str, str]] = field(default_factory=list)

    @property
    def convex(self) -> bool:
        return self.planar and not self.nonconvex_faces and not self.coincident

    def to_dict(self) -> dict:
        return {
            "planar": self.planar,
            "crossings": [[list(a), list(b)] for a, b in self.crossings],
            "nonconvex_faces": list(self.nonconvex_faces),
            "equilibrium_residual": self.equilibrium_residual,
            "coincident": [list(p) for p in self.coincident],
        }


def _outer_positions(outer, radius, start_angle, outer_positions):
    if outer_positions is None:
        return regular_polygon(len(outer), radius, start_angle)
    if set(outer_positions) != set(outer):
        raise EmbeddingInputError("outer_positions must cover exactly the outer-face vertices")
    pts = [tuple(map(float, outer_positions[v])) for v in outer]
    if not is_convex_polygon(pts):
        raise EmbeddingInputError("outer_positions do not form a convex polygon in face order")
    return pts


def tutte_embed(g: Graph, f: FaceStructure, polygon_radius: float = 1.0, *,
                start_angle: float = math.pi / 2,
                outer_positions: Mapping[str, Sequence[float]] | None = None,
                validate: bool = True) -> Embedding:
    """Nail the outer face to a convex polygon and solve for spring equilibrium.

    By default the outer face goes onto a regular polygon of radius
    ``polygon_radius`` with its first vertex at ``start_angle``, in face order
    counterclockwise. ``outer_positions`` overrides the polygon with explicit
    corner positions (they must be convex in face order).

    Every free vertex ends at the spring-weighted mean of its neighbours; the
    x and y systems share one matrix and are solved in a single LU solve.
    """
    check_graph(g)
    check_faces(f)
    polygon_radius = check_positive(polygon_radius, "polygon_radius")
    if validate:
        fv = validate_faces(g, f)
        if not fv:
            raise EmbeddingInputError("invalid faces: " + "; ".join(fv.diagnostics))
        # a lone triangle is its own outer face: nothing free, nothing to check
        if g.n >= 4 and not validate_three_connected(g):
            raise EmbeddingInputError("graph is not 3-connected")
    outer = f.outer_face
    if len(outer) < 3:
        raise EmbeddingInputError("outer face needs at least 3 vertices")

    idx = g.index
    coords = np.zeros((g.n, 2))
    nailed = np.zeros(g.n, dtype=bool)
    for v, p in zip(outer, _outer_positions(outer, polygon_radius, start_angle, outer_positions)):
        coords[idx[v]] = p
        nailed[idx[v]] = True

    free = np.flatnonzero(~nailed)
    if free.size:
        pos = {int(i): k for k, i in enumerate(free)}
        A = np.zeros((free.size, free.size))
        b = np.zeros((free.size, 2))
        for u, v in g.edges:
            w = g.weight(u, v)
            iu, iv = idx[u], idx[v]
            for a, c in ((iu, iv), (iv, iu)):
                if nailed[a]:
                    continue
                A[pos[a], pos[a]] += w
                if nailed[c]:
                    b[pos[a]] += w * coords[c]
                else:
                    A[pos[a], pos[c]] -= w
        try:
            coords[free] = np.linalg.solve(A, b)
        except np.linalg.LinAlgError as exc:
            raise RuntimeError(f"singular equilibrium system: {exc}") from exc
    return Embedding(g, coords, f)


def energy(e: Embedding, g: Graph | None = None) -> float:
    """Spring energy: half the weighted sum of squared edge lengths."""
    g = e.graph if g is None else g
    total = 0.0
    for u, v in g.edges:
        d = e[u] - e[v]
        total += g.weight(u, v) * float(d @ d)
    return 0.5 * total


def equilibrium_residual(e: Embedding, g: Graph, interior: Sequence[str]) -> float:
    worst = 0.0
    for u in interior:
        nbrs = g.neighbors(u)
        ws = np.array([g.weight(u, v) for v in nbrs])
        avg = (ws[:, None] * np.array([e[v] for v in nbrs])).sum(axis=0) / ws.sum()
        worst = max(worst, float(np.linalg.norm(e[u] - avg)))
    return worst


def validate_embedding(e: Embedding, g: Graph | None = None, f: FaceStructure | None = None) -> ConvexityReport:
    """Check straight-line planarity, face convexity and equilibrium of ``e``.

    All O(E^2) edge pairs without a shared endpoint are tested for any contact.
    Tolerances are relative to the embedding's diameter.
    """
    g = e.graph if g is None else g
    f = e.faces if f is None else f
    scale = e.scale or 1.0
    eps_area = EPS_AREA * scale * scale

    coincident = []
    d = e.distances
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if d[i, j] <= EPS_COORD * scale:
                coincident.append((g.vertex_ids[i], g.vertex_ids[j]))

    crossings = []
    edges = list(g.edges)
    for i, (a, b) in enumerate(edges):
        for c, dd in edges[i + 1:]:
            if {a, b} & {c, dd}:
                continue
            if segments_intersect(e[a], e[b], e[c], e[dd], eps_area):
                crossings.append(((a, b), (c, dd)))

    nonconvex = []
    interior = list(g.vertex_ids)
    if f is not None:
        for k, face in enumerate(f.faces):
            if not is_convex_polygon([e[v] for v in face], eps_area):
                nonconvex.append(k)
        outer = set(f.outer_face)
        interior = [v for v in g.vertex_ids if v not in outer]
    residual = equilibrium_residual(e, g, interior)
    return ConvexityReport(not crossings, crossings, nonconvex, residual, coincident)


class TutteEmbedder(BaseEstimator):
    """Estimator wrapper around :func:`tutte_embed`.

    ``fit(graph, faces)`` solves the embedding and validates it;
    ``transform(vertex_ids)`` looks up coordinates.

    Parameters
    ----------
    radius : float
        Circumradius of the regular outer polygon.
    outer_face : int, sequence of str or None
        Face to nail; defaults to the face structure's own outer face.
    start_angle : float
        Angle of the first outer-face vertex.
    outer_positions : mapping or None
        Explicit outer corner positions, overriding the regular polygon.
    """

    def __init__(self, radius=1.0, outer_face=None, start_angle=math.pi / 2, outer_positions=None):
        self.radius = radius
        self.outer_face = outer_face
        self.start_angle = start_angle
        self.outer_positions = outer_positions

    def fit(self, graph, faces, y=None):
        check_graph(graph)
        check_faces(faces)
        if self.outer_face is not None:
            try:
                faces = faces.with_outer(self.outer_face)
            except KeyError as exc:
                raise EmbeddingInputError(str(exc)) from None
        self.embedding_ = tutte_embed(graph, faces, self.radius, start_angle=self.start_angle,
                                      outer_positions=self.outer_positions)
        self.report_ = validate_embedding(self.embedding_)
        self.energy_ = energy(self.embedding_)
        self.n_vertices_ = graph.n
        return self

    def transform(self, vertex_ids=None):
        check_is_fitted(self, "embedding_")
        e = self.embedding_
        if vertex_ids is None:
            return np.array(e.coords)
        return np.array([e[check_vertex(e.graph, v)] for v in vertex_ids])

    def fit_transform(self, graph, faces, y=None):
        return self.fit(graph, faces).transform()
