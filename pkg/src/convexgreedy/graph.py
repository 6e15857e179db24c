"""Undirected graph model, combinatorial face data and JSON (de)serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import networkx as nx


class GraphError(ValueError):
    """Base class for malformed graph input."""


class GraphParseError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DanglingEndpointError(GraphError):
    pass


class NonPositiveWeightError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


def edge_key(u: str, v: str) -> frozenset:
    return frozenset((u, v))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with opaque string vertex ids.

    Vertices are kept in declaration order; ``index`` maps each id to its
    dense position, which is what every tie-break in the package uses.
    """

    vertex_ids: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    spring_weight: Mapping[frozenset, float] = field(default_factory=dict)

    def __post_init__(self):
        vertex_ids = tuple(str(v) for v in self.vertex_ids)
        if not vertex_ids:
            raise EmptyGraphError("empty graph")
        if len(set(vertex_ids)) != len(vertex_ids):
            raise GraphError("duplicate vertex id")
        known = set(vertex_ids)
        seen: set[frozenset] = set()
        edges = []
        for u, v in self.edges:
            u, v = str(u), str(v)
            if u == v:
                raise SelfLoopError(f"self-loop at {u!r}")
            for w in (u, v):
                if w not in known:
                    raise DanglingEndpointError(f"edge ({u!r}, {v!r}) uses undeclared vertex {w!r}")
            key = edge_key(u, v)
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge ({u!r}, {v!r})")
            seen.add(key)
            edges.append((u, v))
        weights = {}
        for key, w in dict(self.spring_weight).items():
            key = frozenset(key)
            if key not in seen:
                raise DanglingEndpointError(f"weight given for non-edge {sorted(key)}")
            w = float(w)
            if not w > 0:
                raise NonPositiveWeightError(f"non-positive weight {w} on edge {sorted(key)}")
            weights[key] = w
        object.__setattr__(self, "vertex_ids", vertex_ids)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "spring_weight", weights)
        object.__setattr__(self, "index", {v: i for i, v in enumerate(vertex_ids)})
        nbrs: dict[str, list[str]] = {v: [] for v in vertex_ids}
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        idx = self.index
        object.__setattr__(
            self, "_nbrs", {v: tuple(sorted(ns, key=idx.__getitem__)) for v, ns in nbrs.items()}
        )
        object.__setattr__(
            self, "adjacency", tuple(tuple(idx[w] for w in self._nbrs[v]) for v in vertex_ids)
        )

    @property
    def n(self) -> int:
        return len(self.vertex_ids)

    def neighbors(self, v: str) -> tuple[str, ...]:
        """Neighbors of ``v`` sorted by vertex index."""
        return self._nbrs[v]

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._nbrs.get(u, ())

    def weight(self, u: str, v: str) -> float:
        return self.spring_weight.get(edge_key(u, v), 1.0)

    def with_weights(self, overrides: Mapping[tuple[str, str], float]) -> "Graph":
        """Copy of the graph with some spring weights replaced."""
        weights = dict(self.spring_weight)
        for (u, v), w in overrides.items():
            if not self.has_edge(u, v):
                raise DanglingEndpointError(f"cannot override weight of non-edge ({u!r}, {v!r})")
            weights[edge_key(u, v)] = w
        return Graph(self.vertex_ids, self.edges, weights)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertex_ids)
        g.add_edges_from(self.edges)
        return g

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertex_ids == other.vertex_ids
            and {edge_key(*e) for e in self.edges} == {edge_key(*e) for e in other.edges}
            and all(self.weight(*e) == other.weight(*e) for e in self.edges)
        )

    def __hash__(self):
        return hash((self.vertex_ids, frozenset(edge_key(*e) for e in self.edges)))


@dataclass(frozen=True)
class FaceStructure:
    faces: tuple[tuple[str, ...], ...]
    outer_face_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(tuple(str(v) for v in f) for f in self.faces))
        object.__setattr__(self, "outer_face_index", int(self.outer_face_index))

    @property
    def outer_face(self) -> tuple[str, ...]:
        return self.faces[self.outer_face_index]

    def find(self, cycle: Sequence[str]) -> int:
        """Index of the face whose boundary is ``cycle`` (any rotation or direction)."""
        cycle = tuple(cycle)
        for i, face in enumerate(self.faces):
            if _same_cycle(face, cycle):
                return i
        raise KeyError(f"no face with boundary {list(cycle)}")

    def with_outer(self, outer: int | Sequence[str]) -> "FaceStructure":
        """Same faces, different outer face; a cycle argument also fixes its listed order."""
        if isinstance(outer, int):
            return FaceStructure(self.faces, outer)
        i = self.find(outer)
        faces = list(self.faces)
        faces[i] = tuple(outer)
        return FaceStructure(tuple(faces), i)


def _same_cycle(a: Sequence[str], b: Sequence[str]) -> bool:
    if len(a) != len(b) or not a:
        return False
    if b[0] not in a:
        return False
    k = list(a).index(b[0])
    rot = tuple(a[k:]) + tuple(a[:k])
    rev = (rot[0],) + tuple(reversed(rot[1:]))
    return tuple(b) in (rot, rev)


def face_edges(face: Sequence[str]) -> list[tuple[str, str]]:
    return [(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


# --------------------------------------------------------------------------
# validation

@dataclass
class ConnectivityResult:
    three_connected: bool
    separator: tuple[str, ...] = ()

    def __bool__(self):
        return self.three_connected


def validate_three_connected(g: Graph) -> ConnectivityResult:
    """Check vertex connectivity >= 3 via unit-capacity max-flow on the split graph.

    On failure ``separator`` holds a minimum vertex cut (size <= 2); it is
    empty when the graph is already disconnected.
    """
    if g.n < 4:
        raise GraphError("too small for 3-connectivity")
    ng = g.to_networkx()
    if not nx.is_connected(ng):
        return ConnectivityResult(False, ())
    if nx.node_connectivity(ng) >= 3:
        return ConnectivityResult(True)
    cut = nx.minimum_node_cut(ng)
    return ConnectivityResult(False, tuple(sorted(cut, key=g.index.__getitem__)))


@dataclass
class FaceValidation:
    valid: bool
    diagnostics: list[str]

    def __bool__(self):
        return self.valid


def validate_faces(g: Graph, f: FaceStructure) -> FaceValidation:
    diagnostics = []
    if not f.faces:
        return FaceValidation(False, ["no faces"])
    if not 0 <= f.outer_face_index < len(f.faces):
        diagnostics.append(f"outer face index {f.outer_face_index} out of range")
    count = {edge_key(*e): 0 for e in g.edges}
    for i, face in enumerate(f.faces):
        if len(face) < 3:
            diagnostics.append(f"face {i} has length {len(face)} < 3")
        if len(set(face)) != len(face):
            diagnostics.append(f"face {i} is not a simple cycle")
        for u, v in face_edges(face):
            key = edge_key(u, v)
            if key not in count:
                diagnostics.append(f"face {i} uses non-edge ({u}, {v})")
                continue
            count[key] += 1
    for (u, v) in g.edges:
        c = count[edge_key(u, v)]
        if c == 1:
            diagnostics.append(f"edge ({u}, {v}) in one face only")
        elif c != 2:
            diagnostics.append(f"edge ({u}, {v}) in {c} faces")
    euler = g.n - len(g.edges) + len(f.faces)
    if euler != 2:
        diagnostics.append(f"Euler characteristic {euler} != 2")
    return FaceValidation(not diagnostics, diagnostics)


# --------------------------------------------------------------------------
# serialization

def load_graph(document: str | Mapping) -> tuple[Graph, FaceStructure | None]:
    """Parse a graph document (JSON text or already-decoded mapping)."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise GraphParseError(f"invalid JSON: {exc}") from None
    if not isinstance(document, Mapping):
        raise GraphParseError("graph document must be a JSON object")
    vertices = document.get("vertices")
    if vertices is None or not isinstance(vertices, list):
        raise GraphParseError("missing 'vertices' list")
    if not vertices:
        raise EmptyGraphError("empty graph")
    edges, weights = [], {}
    for item in document.get("edges", []):
        if not isinstance(item, list) or len(item) not in (2, 3):
            raise GraphParseError(f"malformed edge entry {item!r}")
        u, v = str(item[0]), str(item[1])
        edges.append((u, v))
        if len(item) == 3:
            try:
                w = float(item[2])
            except (TypeError, ValueError):
                raise GraphParseError(f"non-numeric weight in {item!r}") from None
            if not w > 0:
                raise NonPositiveWeightError(f"non-positive weight {w} on edge ({u!r}, {v!r})")
            weights[(u, v)] = w
    g = Graph(tuple(str(v) for v in vertices), tuple(edges))
    if weights:
        g = Graph(g.vertex_ids, g.edges, {edge_key(u, v): w for (u, v), w in weights.items()})
    faces = None
    if document.get("faces") is not None:
        raw = document["faces"]
        if not isinstance(raw, list) or not all(isinstance(fc, list) for fc in raw):
            raise GraphParseError("'faces' must be a list of vertex lists")
        try:
            outer = int(document.get("outer_face", 0))
        except (TypeError, ValueError):
            raise GraphParseError("'outer_face' must be an integer") from None
        faces = FaceStructure(tuple(tuple(fc) for fc in raw), outer)
    return g, faces


def graph_to_dict(g: Graph, f: FaceStructure | None = None) -> dict:
    edges = []
    for u, v in g.edges:
        key = edge_key(u, v)
        edges.append([u, v, g.spring_weight[key]] if key in g.spring_weight else [u, v])
    doc = {"vertices": list(g.vertex_ids), "edges": edges}
    if f is not None:
        doc["faces"] = [list(face) for face in f.faces]
        doc["outer_face"] = f.outer_face_index
    return doc


def dump_graph(g: Graph, f: FaceStructure | None = None, indent: int | None = None) -> str:
    return json.dumps(graph_to_dict(g, f), indent=indent)

