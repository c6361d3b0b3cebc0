"""Graph-backed and face-set-backed simplicial complexes.

A flag complex is determined by its underlying graph: the faces are
exactly the cliques, so ``FlagComplex`` stores adjacency only and all
face information is derived.  ``FaceComplex`` stores every face
explicitly; it is deliberately naive and serves as the brute-force
oracle against which the graph operations are cross-checked.

Canonical vertex ids: a cross-polytope boundary on dimension parameter
``d`` uses ids ``0 .. 2d-1`` with ``antipode(i) == i ^ 1``; vertices
added by edge subdivisions continue at ``2d``.
"""

from __future__ import annotations

import json
from collections import Counter
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping

__all__ = [
    "FlagComplex",
    "FaceComplex",
    "antipode",
    "cross_polytope",
    "link",
    "join",
    "subdivide_edge",
    "subdivide_face_general",
    "is_flag",
    "is_isomorphic_under",
]

Vertex = Hashable


def _vkey(v):
    """Total order for the vertex kinds used here: ints and frozensets of ints."""
    if isinstance(v, frozenset):
        return (1, len(v), tuple(sorted(v)))
    return (0, v)


class FlagComplex:
    """Immutable undirected graph whose cliques (including the empty set) are the faces."""

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable = ()):
        adj: dict = {v: set() for v in vertices}
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop edge at vertex {a!r}")
            if a not in adj or b not in adj:
                raise ValueError(f"edge ({a!r}, {b!r}) uses a vertex not in the complex")
            adj[a].add(b)
            adj[b].add(a)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    @property
    def vertices(self) -> frozenset:
        return frozenset(self._adj)

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def has_edge(self, a, b) -> bool:
        return a in self._adj and b in self._adj[a]

    def edges(self) -> list[tuple]:
        """All edges, each as a sorted pair, in deterministic order."""
        out = set()
        for v, ns in self._adj.items():
            for u in ns:
                out.add(tuple(sorted((u, v), key=_vkey)))
        return sorted(out, key=lambda e: (_vkey(e[0]), _vkey(e[1])))

    def is_face(self, face: Iterable[Vertex]) -> bool:
        fs = frozenset(face)
        if not fs <= self.vertices:
            return False
        return all(b in self._adj[a] for a, b in combinations(fs, 2))

    def common_neighbors(self, face: Iterable[Vertex]) -> frozenset:
        fs = frozenset(face)
        if not fs:
            return self.vertices
        it = iter(fs)
        out = set(self._adj[next(it)])
        for v in it:
            out &= self._adj[v]
        return frozenset(out)

    def faces(self) -> Iterator[frozenset]:
        """Every clique, the empty one included, each exactly once."""
        order = sorted(self._adj, key=_vkey)
        adj = self._adj
        yield frozenset()

        def grow(clique, candidates):
            for i, v in enumerate(candidates):
                cur = clique + (v,)
                yield frozenset(cur)
                nxt = [u for u in candidates[i + 1 :] if u in adj[v]]
                if nxt:
                    yield from grow(cur, nxt)

        yield from grow((), order)

    def clique_count_by_size(self) -> Counter:
        """Number of cliques of each size, without materializing the cliques."""
        counts: Counter = Counter({0: 1})
        adj = self._adj
        order = sorted(self._adj, key=_vkey)

        def grow(size, candidates):
            for i, v in enumerate(candidates):
                counts[size + 1] += 1
                nxt = [u for u in candidates[i + 1 :] if u in adj[v]]
                if nxt:
                    grow(size + 1, nxt)

        grow(0, order)
        return counts

    def induced(self, vertices: Iterable[Vertex]) -> "FlagComplex":
        vs = frozenset(vertices)
        if not vs <= self.vertices:
            raise ValueError("induced subgraph on vertices outside the complex")
        edges = [(a, b) for a, b in combinations(vs, 2) if b in self._adj[a]]
        return FlagComplex(vs, edges)

    def relabel(self, mapping: Mapping) -> "FlagComplex":
        """Rename vertices through a bijective mapping covering all of them."""
        if set(mapping) != self.vertices or len(set(mapping.values())) != len(self._adj):
            raise ValueError("relabel mapping is not a bijection on the vertex set")
        return FlagComplex(
            (mapping[v] for v in self._adj),
            ((mapping[a], mapping[b]) for a, b in self.edges()),
        )

    def to_face_complex(self) -> "FaceComplex":
        return FaceComplex(self.vertices, self.faces())

    def __eq__(self, other) -> bool:
        return isinstance(other, FlagComplex) and self._adj == other._adj

    def __hash__(self):
        return hash(frozenset((v, ns) for v, ns in self._adj.items()))

    def __repr__(self):
        return f"FlagComplex({len(self._adj)} vertices, {len(self.edges())} edges)"

    def to_json(self) -> str:
        vs = sorted(self._adj)
        if not all(isinstance(v, int) for v in vs):
            raise ValueError("JSON form requires integer vertex ids")
        return json.dumps({"vertices": vs, "edges": [list(e) for e in self.edges()]})

    @classmethod
    def from_json_obj(cls, obj) -> "FlagComplex":
        return cls(obj["vertices"], [tuple(e) for e in obj["edges"]])

    @classmethod
    def from_json(cls, text: str) -> "FlagComplex":
        return cls.from_json_obj(json.loads(text))


class FaceComplex:
    """Explicit downward-closed face set; the slow oracle twin of FlagComplex."""

    __slots__ = ("vertices", "faces")

    def __init__(self, vertices: Iterable[Vertex], faces: Iterable[Iterable[Vertex]]):
        self.vertices = frozenset(vertices)
        self.faces = frozenset(frozenset(f) for f in faces) | {frozenset()}
        for v in self.vertices:
            if frozenset((v,)) not in self.faces:
                raise ValueError(f"singleton {v!r} missing from the face set")
        for f in self.faces:
            if not f <= self.vertices:
                raise ValueError(f"face {set(f)!r} uses a vertex not in the complex")
            for v in f:
                if f - {v} not in self.faces:
                    raise ValueError(f"face set not downward closed at {set(f)!r}")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Vertex]], vertices: Iterable[Vertex] = ()) -> "FaceComplex":
        """Downward closure of the given maximal faces (extra isolated vertices allowed)."""
        faces = {frozenset()}
        vs = set(vertices)
        for facet in facets:
            fs = frozenset(facet)
            vs |= fs
            for r in range(1, len(fs) + 1):
                faces.update(frozenset(c) for c in combinations(fs, r))
        faces.update(frozenset((v,)) for v in vs)
        return cls(vs, faces)

    def facets(self) -> list[frozenset]:
        out = [f for f in self.faces if not any(f < g for g in self.faces)]
        return sorted(out, key=lambda f: (len(f), tuple(sorted(f, key=_vkey))))

    def f_counts(self) -> Counter:
        return Counter(len(f) for f in self.faces)

    def one_skeleton(self) -> FlagComplex:
        return FlagComplex(self.vertices, (tuple(f) for f in self.faces if len(f) == 2))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FaceComplex)
            and self.vertices == other.vertices
            and self.faces == other.faces
        )

    def __hash__(self):
        return hash((self.vertices, self.faces))

    def __repr__(self):
        return f"FaceComplex({len(self.vertices)} vertices, {len(self.faces)} faces)"

    def to_json(self) -> str:
        vs = sorted(self.vertices)
        if not all(isinstance(v, int) for v in vs):
            raise ValueError("JSON form requires integer vertex ids")
        return json.dumps({"vertices": vs, "facets": [sorted(f) for f in self.facets()]})

    @classmethod
    def from_json_obj(cls, obj) -> "FaceComplex":
        return cls.from_facets(obj["facets"], obj["vertices"])

    @classmethod
    def from_json(cls, text: str) -> "FaceComplex":
        return cls.from_json_obj(json.loads(text))


def antipode(v: int) -> int:
    """Antipodal partner under the canonical cross-polytope id scheme."""
    return v ^ 1


def cross_polytope(d: int) -> FlagComplex:
    """Boundary complex of the d-dimensional cross polytope, on ids 0 .. 2d-1.

    Vertex ``i`` is adjacent to every vertex except ``antipode(i)``.
    """
    if d < 1:
        raise ValueError(f"cross polytope dimension must be >= 1, got {d}")
    vs = range(2 * d)
    edges = [(a, b) for a, b in combinations(vs, 2) if b != antipode(a)]
    return FlagComplex(vs, edges)


def link(c: FlagComplex, face: Iterable[Vertex]) -> FlagComplex:
    """Induced subcomplex on the common neighbors of a face; link of the empty face is c."""
    fs = frozenset(face)
    if not c.is_face(fs):
        raise ValueError(f"{set(fs)!r} is not a face of the complex")
    if not fs:
        return c
    return c.induced(c.common_neighbors(fs))


def join(c1: FlagComplex, c2: FlagComplex) -> FlagComplex:
    """Disjoint union of the graphs plus every edge between the two sides."""
    if c1.vertices & c2.vertices:
        raise ValueError("join requires disjoint vertex sets")
    edges = c1.edges() + c2.edges() + [(a, b) for a in c1.vertices for b in c2.vertices]
    return FlagComplex(c1.vertices | c2.vertices, edges)


def subdivide_edge(c: FlagComplex, edge: Iterable[Vertex], s: Vertex) -> FlagComplex:
    """Stellar subdivision in an edge.

    The edge is removed and the fresh vertex ``s`` becomes adjacent to both
    endpoints and to every common neighbor of the endpoints.  The result is
    again flag.
    """
    a, b = tuple(edge)
    if not c.has_edge(a, b):
        raise ValueError(f"({a!r}, {b!r}) is not an edge of the complex")
    if s in c.vertices:
        raise ValueError(f"subdivision vertex {s!r} already present")
    star = c.common_neighbors((a, b)) | {a, b}
    edges = [e for e in c.edges() if set(e) != {a, b}]
    edges.extend((v, s) for v in star)
    return FlagComplex(c.vertices | {s}, edges)


def subdivide_face_general(c: FaceComplex, face: Iterable[Vertex], s: Vertex) -> FaceComplex:
    """Stellar subdivision of an arbitrary nonempty face, on the explicit face set.

    Keeps the faces not containing ``face``, and adds ``tau | {s}`` for every
    ``tau`` that does not contain ``face`` but spans a face together with it.
    Subdividing a singleton is a degenerate rename of that vertex to ``s``.
    """
    fs = frozenset(face)
    if not fs:
        raise ValueError("cannot subdivide the empty face")
    if fs not in c.faces:
        raise ValueError(f"{set(fs)!r} is not a face of the complex")
    if s in c.vertices:
        raise ValueError(f"subdivision vertex {s!r} already present")
    kept = {f for f in c.faces if not fs <= f}
    coned = {f | {s} for f in c.faces if not fs <= f and (f | fs) in c.faces}
    faces = kept | coned
    vertices = {v for f in faces for v in f}
    return FaceComplex(vertices, faces)


def is_flag(c: FaceComplex) -> bool:
    """True iff every clique of the 1-skeleton is a face."""
    return set(c.one_skeleton().faces()) == set(c.faces)


def is_isomorphic_under(c1: FlagComplex, c2: FlagComplex, mapping: Mapping) -> bool:
    """Check a GIVEN vertex bijection for being an isomorphism (no search).

    Flag complexes are determined by their graphs, so preserving adjacency in
    both directions is exactly an inclusion-preserving bijection on faces.
    """
    if set(mapping) != c1.vertices:
        raise ValueError("mapping keys do not cover the first complex's vertices")
    if set(mapping.values()) != c2.vertices or len(set(mapping.values())) != len(mapping):
        raise ValueError("mapping is not a bijection onto the second complex's vertices")
    for a, b in combinations(c1.vertices, 2):
        if c1.has_edge(a, b) != c2.has_edge(mapping[a], mapping[b]):
            return False
    return True
