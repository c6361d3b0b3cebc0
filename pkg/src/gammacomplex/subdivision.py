"""Subdivision sequences, their K- and W-sets, and the gamma complex.

A subdivision sequence starts from a cross-polytope boundary and applies
edge subdivisions one at a time.  Alongside the complexes it maintains,
for every vertex v, the set K(v) of subdivision vertices whose creating
edge had both endpoints adjacent to v at creation time.  The gamma
complex is the graph on the subdivision vertices w_1..w_k where w_a ~ w_b
(a < b) exactly when w_a was in K(w_b) at the moment w_b was created; its
f-polynomial equals the gamma-polynomial of the final complex, which
``verify_f_equals_gamma`` checks instance by instance.

Every face F of the final complex also carries an induced sequence of
edge subdivisions of a smaller cross-polytope whose result is the link of
F, labeled by ambient vertices.  Its new vertices are the W-set of F, and
``phi`` is the order-preserving bijection K(F) -> W(F).
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .complexes import FlagComplex, cross_polytope, link, subdivide_edge
from .polynomials import f_from_counts, gamma_of

__all__ = [
    "FaceClass",
    "SubdivisionStep",
    "SubdivisionSequence",
    "InducedSequence",
    "new_sequence",
    "extend",
    "random_sequence",
    "k_set",
    "classify_face",
    "induced_sequence",
    "w_set",
    "phi",
    "gamma_complex",
    "verify_f_equals_gamma",
]


class FaceClass(enum.Enum):
    """Position of a face relative to the most recent subdivision step."""

    F1 = "F1"  # contains an endpoint of the subdivided edge, not the new vertex
    F2 = "F2"  # contains an endpoint and the new vertex
    F3 = "F3"  # contains the new vertex only
    F4 = "F4"  # avoids all three but lies in the new vertex's link
    F5 = "F5"  # avoids all three and is not in the new vertex's link


class SubdivisionStep(NamedTuple):
    edge: tuple[int, int]
    new_vertex: int


class _LinkSeq(NamedTuple):
    """Recipe for the induced sequence of a face, in ambient vertex labels.

    ``pairs`` are the antipodal pairs of the starting cross-polytope;
    ``steps`` are edge subdivisions applied in order, each bringing one
    new (ambient-labeled) vertex.
    """

    pairs: tuple[tuple[int, int], ...]
    steps: tuple[tuple[tuple[int, int], int], ...]


def _rename(ls: _LinkSeq, old: int, new: int) -> _LinkSeq:
    def sub(x):
        return new if x == old else x

    return _LinkSeq(
        tuple((sub(u), sub(v)) for u, v in ls.pairs),
        tuple(((sub(a), sub(b)), sub(w)) for (a, b), w in ls.steps),
    )


class SubdivisionSequence:
    """Cross-polytope boundary plus an ordered list of edge subdivisions.

    Instances are immutable; ``extend`` returns a new sequence.  All the
    intermediate complexes and the full K-table after every step are kept:
    the sizes involved are tiny and the recursive constructions need them.
    """

    __slots__ = ("d", "steps", "complexes", "k_tables", "k_snapshots", "gamma_edges", "_cache")

    def __init__(self, d, steps, complexes, k_tables, k_snapshots, gamma_edges):
        self.d = d
        self.steps = steps
        self.complexes = complexes
        self.k_tables = k_tables
        self.k_snapshots = k_snapshots
        self.gamma_edges = gamma_edges
        self._cache: dict = {}

    @property
    def k(self) -> int:
        return len(self.steps)

    @property
    def final(self) -> FlagComplex:
        return self.complexes[-1]

    @property
    def k_table(self) -> dict[int, frozenset[int]]:
        return self.k_tables[-1]

    def w_id(self, i: int) -> int:
        """Vertex id of the i-th subdivision vertex, i starting at 1."""
        if not 1 <= i <= self.k:
            raise ValueError(f"subdivision index {i} out of range 1..{self.k}")
        return 2 * self.d + i - 1

    def w_index(self, vid: int) -> int:
        i = vid - 2 * self.d + 1
        if not 1 <= i <= self.k:
            raise ValueError(f"{vid} is not a subdivision vertex id")
        return i

    def w_ids(self) -> tuple[int, ...]:
        return tuple(2 * self.d + i for i in range(self.k))

    def to_json(self) -> str:
        return json.dumps({"d": self.d, "steps": [{"edge": list(s.edge)} for s in self.steps]})

    @classmethod
    def from_json_obj(cls, obj) -> "SubdivisionSequence":
        seq = new_sequence(obj["d"])
        for i, step in enumerate(obj["steps"], start=1):
            try:
                seq = extend(seq, tuple(step["edge"]))
            except ValueError as exc:
                raise ValueError(f"step {i}: {exc}") from None
        return seq

    @classmethod
    def from_json(cls, text: str) -> "SubdivisionSequence":
        return cls.from_json_obj(json.loads(text))


def new_sequence(d: int) -> SubdivisionSequence:
    """Zero-step sequence on the cross-polytope boundary of dimension parameter d."""
    start = cross_polytope(d)
    table = {v: frozenset() for v in start.vertices}
    return SubdivisionSequence(
        d=d,
        steps=(),
        complexes=(start,),
        k_tables=(table,),
        k_snapshots=(),
        gamma_edges=frozenset(),
    )


def extend(seq: SubdivisionSequence, edge: Iterable[int]) -> SubdivisionSequence:
    """Subdivide one more edge, updating the K-table and the gamma edges.

    K is unchanged for the two endpoints and for vertices not adjacent to
    the new vertex; every common neighbor of the endpoints gains the new
    vertex; the new vertex starts with the intersection of the endpoints'
    pre-step K-sets, and that frozen intersection is what contributes
    gamma edges.
    """
    a, b = tuple(edge)
    cur = seq.final
    if not cur.has_edge(a, b):
        raise ValueError(f"({a}, {b}) is not an edge of the current complex")
    w = 2 * seq.d + seq.k
    table = dict(seq.k_table)
    snapshot = {a: table[a], b: table[b]}
    kw = table[a] & table[b]
    for v in cur.common_neighbors((a, b)):
        table[v] = table[v] | {w}
    table[w] = kw
    return SubdivisionSequence(
        d=seq.d,
        steps=seq.steps + (SubdivisionStep((a, b), w),),
        complexes=seq.complexes + (subdivide_edge(cur, (a, b), w),),
        k_tables=seq.k_tables + (table,),
        k_snapshots=seq.k_snapshots + (snapshot,),
        gamma_edges=seq.gamma_edges | {(x, w) for x in kw},
    )


def random_sequence(d: int, k: int, seed: int) -> SubdivisionSequence:
    """k uniformly chosen valid edge subdivisions, deterministic in the seed."""
    if d < 2 and k > 0:
        raise ValueError(f"d={d} has no edges to subdivide")
    rng = random.Random(seed)
    seq = new_sequence(d)
    for _ in range(k):
        seq = extend(seq, rng.choice(seq.final.edges()))
    return seq


def k_set_at(seq: SubdivisionSequence, j: int, face: Iterable[int]) -> tuple[int, ...]:
    """K of a face of the j-th complex, ordered by subdivision index."""
    fs = frozenset(face)
    if not seq.complexes[j].is_face(fs):
        raise ValueError(f"{set(fs)!r} is not a face of complex {j}")
    if not fs:
        return tuple(2 * seq.d + i for i in range(j))
    table = seq.k_tables[j]
    it = iter(fs)
    out = set(table[next(it)])
    for v in it:
        out &= table[v]
    return tuple(sorted(out))


def k_set(seq: SubdivisionSequence, face: Iterable[int]) -> tuple[int, ...]:
    """K of a face of the final complex: intersection of the vertex K-sets."""
    return k_set_at(seq, seq.k, face)


def _classify_at(seq: SubdivisionSequence, j: int, fs: frozenset[int]) -> FaceClass:
    (a, b), w = seq.steps[j - 1]
    if a in fs or b in fs:
        return FaceClass.F2 if w in fs else FaceClass.F1
    if w in fs:
        return FaceClass.F3
    if fs <= seq.complexes[j].neighbors(w):
        return FaceClass.F4
    return FaceClass.F5


def classify_face(seq: SubdivisionSequence, face: Iterable[int]) -> FaceClass:
    """One of the five positions of a face relative to the last step."""
    if seq.k == 0:
        raise ValueError("classification needs at least one subdivision step")
    fs = frozenset(face)
    if not seq.final.is_face(fs):
        raise ValueError(f"{set(fs)!r} is not a face of the final complex")
    return _classify_at(seq, seq.k, fs)


def _link_seq(seq: SubdivisionSequence, j: int, fs: frozenset[int]) -> _LinkSeq:
    """Induced sequence recipe for a face of the j-th complex (recursion on j)."""
    key = (j, fs)
    cached = seq._cache.get(key)
    if cached is not None:
        return cached
    if j == 0:
        pairs = tuple(
            (2 * i, 2 * i + 1)
            for i in range(seq.d)
            if 2 * i not in fs and 2 * i + 1 not in fs
        )
        out = _LinkSeq(pairs, ())
    else:
        (a, b), w = seq.steps[j - 1]
        cls = _classify_at(seq, j, fs)
        if cls is FaceClass.F1:
            other = b if a in fs else a
            out = _rename(_link_seq(seq, j - 1, fs), other, w)
        elif cls is FaceClass.F2:
            other = b if a in fs else a
            out = _link_seq(seq, j - 1, fs - {w} | {other})
        elif cls is FaceClass.F3:
            sub = _link_seq(seq, j - 1, fs - {w} | {a, b})
            out = _LinkSeq(sub.pairs + ((a, b),), sub.steps)
        elif cls is FaceClass.F4:
            sub = _link_seq(seq, j - 1, fs)
            out = _LinkSeq(sub.pairs, sub.steps + (((a, b), w),))
        else:
            out = _link_seq(seq, j - 1, fs)
    seq._cache[key] = out
    return out


@dataclass(frozen=True)
class InducedSequence:
    """Subdivision sequence of a face's link, with ambient vertex labels.

    ``base`` is the sequence in canonical ids (None when the link is the
    empty complex), ``label_of`` translates canonical ids back to ambient
    vertices, and ``w_labels`` are the link's subdivision vertices in
    creation order: the W-set of the face.
    """

    base: SubdivisionSequence | None
    w_labels: tuple[int, ...]
    label_of: Mapping[int, int]
    canonical_of: Mapping[int, int]

    @property
    def step_count(self) -> int:
        return len(self.w_labels)

    def result(self) -> FlagComplex:
        """Final complex of the induced sequence, in ambient labels."""
        if self.base is None:
            return FlagComplex()
        return self.base.final.relabel(self.label_of)

    def k_set_ambient(self, face: Iterable[int]) -> tuple[int, ...]:
        """K-set of a face of the link, translated to ambient labels."""
        fs = frozenset(face)
        if self.base is None:
            if fs:
                raise ValueError(f"{set(fs)!r} is not a face of the empty link")
            return ()
        canon = frozenset(self.canonical_of[v] for v in fs)
        return tuple(self.label_of[c] for c in k_set(self.base, canon))

    def gamma_complex_ambient(self) -> FlagComplex:
        if self.base is None:
            return FlagComplex()
        return gamma_complex(self.base).relabel(
            {c: self.label_of[c] for c in self.base.w_ids()}
        )


def induced_sequence_at(seq: SubdivisionSequence, j: int, face: Iterable[int]) -> InducedSequence:
    """Induced sequence for a face of the j-th complex."""
    fs = frozenset(face)
    if not seq.complexes[j].is_face(fs):
        raise ValueError(f"{set(fs)!r} is not a face of complex {j}")
    recipe = _link_seq(seq, j, fs)
    if not recipe.pairs:
        if recipe.steps:
            raise RuntimeError("internal inconsistency: steps recorded on an empty link")
        return InducedSequence(base=None, w_labels=(), label_of={}, canonical_of={})
    canonical_of: dict[int, int] = {}
    for i, (u, v) in enumerate(recipe.pairs):
        canonical_of[u] = 2 * i
        canonical_of[v] = 2 * i + 1
    base = new_sequence(len(recipe.pairs))
    w_labels = []
    for (u, v), w in recipe.steps:
        base = extend(base, (canonical_of[u], canonical_of[v]))
        canonical_of[w] = base.steps[-1].new_vertex
        w_labels.append(w)
    label_of = {c: amb for amb, c in canonical_of.items()}
    return InducedSequence(
        base=base,
        w_labels=tuple(w_labels),
        label_of=label_of,
        canonical_of=canonical_of,
    )


def induced_sequence(seq: SubdivisionSequence, face: Iterable[int]) -> InducedSequence:
    return induced_sequence_at(seq, seq.k, face)


def w_set_at(seq: SubdivisionSequence, j: int, face: Iterable[int]) -> tuple[int, ...]:
    fs = frozenset(face)
    if not seq.complexes[j].is_face(fs):
        raise ValueError(f"{set(fs)!r} is not a face of complex {j}")
    return tuple(w for _, w in _link_seq(seq, j, fs).steps)


def w_set(seq: SubdivisionSequence, face: Iterable[int]) -> tuple[int, ...]:
    """New vertices of the face's induced sequence, in creation order."""
    return w_set_at(seq, seq.k, face)


def phi(seq: SubdivisionSequence, face: Iterable[int]) -> dict[int, int]:
    """Order-preserving bijection from the K-set onto the W-set of a face."""
    ks = k_set(seq, face)
    ws = w_set(seq, face)
    if len(ks) != len(ws):
        raise RuntimeError(
            f"internal inconsistency: |K|={len(ks)} but |W|={len(ws)} for {set(face)!r}"
        )
    return dict(zip(ks, ws))


def gamma_complex(seq: SubdivisionSequence) -> FlagComplex:
    """Flag complex on the subdivision vertices with the accumulated edges."""
    return FlagComplex(seq.w_ids(), seq.gamma_edges)


def gamma_complex_from_snapshots(seq: SubdivisionSequence) -> FlagComplex:
    """Recompute the gamma complex from the per-step endpoint snapshots."""
    edges = set()
    for step, snap in zip(seq.steps, seq.k_snapshots):
        a, b = step.edge
        for x in snap[a] & snap[b]:
            edges.add((x, step.new_vertex))
    return FlagComplex(seq.w_ids(), edges)


def verify_f_equals_gamma(seq: SubdivisionSequence) -> dict:
    """Compare f of the gamma complex with gamma of the final complex, exactly.

    Inequality is reported, never raised; the f side is computed without a
    degree cap so that a too-large clique in the gamma complex would surface
    as a report mismatch.
    """
    f_gamma = f_from_counts(gamma_complex(seq).clique_count_by_size())
    gamma_theta = gamma_of(seq.final, seq.d).gamma
    return {
        "d": seq.d,
        "k": seq.k,
        "f_gamma": f_gamma.to_list(),
        "gamma_theta": gamma_theta.to_list(),
        "equal": f_gamma == gamma_theta,
    }
