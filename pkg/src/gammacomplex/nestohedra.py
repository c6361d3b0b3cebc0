"""Flag building sets, flag orderings, and their gamma complexes.

A building set on [n] is a family of nonempty subsets containing all
singletons and closed under union of intersecting members; it is flag
when every non-singleton member splits as a disjoint union of two
members.  Adding the members outside a binary decomposition one at a
time, with every prefix again a flag building set, corresponds step for
step to subdividing edges of the dual nested-set complex, and
``ordering_to_sequence`` realizes that correspondence on canonical
cross-polytope ids.  ``verify_ordering_equivalence`` checks that the
gamma complex of the resulting sequence and the one read directly off
the ordering's U/V-sets agree, vertex for vertex.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .complexes import (
    FaceComplex,
    FlagComplex,
    cross_polytope,
    is_flag,
    is_isomorphic_under,
)
from .polynomials import f_from_counts, gamma_of
from .subdivision import (
    SubdivisionSequence,
    extend,
    gamma_complex,
    new_sequence,
)

__all__ = [
    "BuildingSet",
    "FlagOrdering",
    "validate_building_set",
    "is_flag_building_set",
    "find_decomposition",
    "find_flag_ordering",
    "validate_ordering",
    "u_set",
    "v_set",
    "gamma_complex_of_ordering",
    "nested_set_faces",
    "nested_set_complex",
    "ordering_to_sequence",
    "verify_ordering_equivalence",
    "power_set_building_set",
    "interval_building_set",
    "random_flag_building_set",
]

Subset = frozenset


def _skey(s: frozenset) -> tuple:
    return (len(s), tuple(sorted(s)))


@dataclass(frozen=True)
class BuildingSet:
    """Family of nonempty subsets of the ground set {1, ..., n}."""

    n: int
    elements: frozenset[Subset]

    @classmethod
    def of(cls, n: int, elements: Iterable[Iterable[int]]) -> "BuildingSet":
        return cls(n, frozenset(frozenset(e) for e in elements))

    @property
    def ground(self) -> Subset:
        return frozenset(range(1, self.n + 1))

    def is_connected(self) -> bool:
        return self.ground in self.elements

    def sorted_elements(self) -> list[Subset]:
        return sorted(self.elements, key=_skey)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "elements": [sorted(e) for e in self.sorted_elements()]})

    @classmethod
    def from_json_obj(cls, obj) -> "BuildingSet":
        return cls.of(obj["n"], obj["elements"])

    @classmethod
    def from_json(cls, text: str) -> "BuildingSet":
        return cls.from_json_obj(json.loads(text))


def validate_building_set(b: BuildingSet) -> bool:
    """Both axioms: all singletons present, unions of intersecting pairs present."""
    ground = b.ground
    if any(not e or not e <= ground for e in b.elements):
        return False
    if any(frozenset((i,)) not in b.elements for i in ground):
        return False
    return all(
        (x | y) in b.elements
        for x, y in combinations(b.elements, 2)
        if x & y
    )


def _splits(target: Subset, elements: frozenset[Subset]) -> list[tuple[Subset, Subset]]:
    """Unordered two-part splits of ``target`` inside ``elements``, each listed once."""
    out = []
    seen = set()
    for part in elements:
        if part < target and (target - part) in elements:
            pair = frozenset((part, target - part))
            if pair not in seen:
                seen.add(pair)
                small, big = sorted(pair, key=_skey)
                out.append((small, big))
    return out


def is_flag_building_set(b: BuildingSet) -> bool:
    """Every non-singleton member is a disjoint union of two members."""
    if not validate_building_set(b):
        raise ValueError("not a valid building set")
    return all(
        len(e) == 1 or _splits(e, b.elements) for e in b.elements
    )


def find_decomposition(b: BuildingSet) -> frozenset[Subset]:
    """Deterministic minimal connected flag building set inside ``b``.

    Recursively splits the ground set; among the available splits the one
    whose parts are (smallest small part, lexicographically least large
    part) wins, which keeps the result stable across runs.
    """
    if not b.is_connected():
        raise ValueError("building set is not connected (ground set missing)")
    out: set[Subset] = set()

    def split(target: Subset) -> None:
        out.add(target)
        if len(target) == 1:
            return
        options = _splits(target, b.elements)
        if not options:
            raise ValueError(f"{sorted(target)} has no two-part split: building set is not flag")
        small, big = min(options, key=lambda p: (len(p[0]), tuple(sorted(p[1])), tuple(sorted(p[0]))))
        split(small)
        split(big)

    split(b.ground)
    return frozenset(out)


@dataclass(frozen=True)
class FlagOrdering:
    """Binary decomposition plus an order on the remaining members.

    Every prefix (decomposition plus the first j ordered members) is again
    a flag building set.
    """

    building_set: BuildingSet
    decomposition: frozenset[Subset]
    order: tuple[Subset, ...]

    @property
    def k(self) -> int:
        return len(self.order)

    def prefix_elements(self, j: int) -> frozenset[Subset]:
        """Members of the j-th prefix family (j = 0 is the decomposition alone)."""
        return self.decomposition | frozenset(self.order[:j])

    def prefix_building_set(self, j: int) -> BuildingSet:
        return BuildingSet(self.building_set.n, self.prefix_elements(j))

    def to_json(self) -> str:
        return json.dumps(
            {
                "decomposition": [sorted(e) for e in sorted(self.decomposition, key=_skey)],
                "order": [sorted(e) for e in self.order],
            }
        )

    @classmethod
    def from_json_obj(cls, b: BuildingSet, obj) -> "FlagOrdering":
        return cls(
            building_set=b,
            decomposition=frozenset(frozenset(e) for e in obj["decomposition"]),
            order=tuple(frozenset(e) for e in obj["order"]),
        )


def _can_append(current: set[Subset], new: Subset) -> bool:
    """Would the family stay a flag building set after adding ``new``?"""
    if not any(part < new and (new - part) in current for part in current):
        return False
    for other in current:
        if new & other and not (new <= other or other <= new):
            if (new | other) not in current:
                return False
    return True


def find_flag_ordering(
    b: BuildingSet,
    decomposition: frozenset[Subset] | None = None,
    rng: random.Random | None = None,
) -> FlagOrdering:
    """Order the members outside the decomposition with every prefix flag.

    Candidates are tried smallest first (or shuffled when ``rng`` is given)
    with full backtracking; exhaustion means the input was not a connected
    flag building set to begin with.
    """
    decomposition = decomposition if decomposition is not None else find_decomposition(b)
    remaining = sorted(b.elements - decomposition, key=_skey)

    def search(current: set[Subset], left: list[Subset]) -> list[Subset] | None:
        if not left:
            return []
        candidates = list(left)
        if rng is not None:
            rng.shuffle(candidates)
        for cand in candidates:
            if _can_append(current, cand):
                rest = search(current | {cand}, [x for x in left if x != cand])
                if rest is not None:
                    return [cand] + rest
        return None

    order = search(set(decomposition), remaining)
    if order is None:
        raise ValueError("no flag ordering exists: input is not a connected flag building set")
    return FlagOrdering(building_set=b, decomposition=decomposition, order=tuple(order))


def validate_ordering(o: FlagOrdering) -> None:
    """Raise unless the ordering enumerates the building set with flag prefixes."""
    b = o.building_set
    dec = BuildingSet(b.n, frozenset(o.decomposition))
    if not (validate_building_set(dec) and dec.is_connected() and is_flag_building_set(dec)):
        raise ValueError("decomposition is not a connected flag building set")
    if len(o.decomposition) != 2 * b.n - 1:
        raise ValueError("decomposition is not minimal")
    if len(set(o.order)) != len(o.order) or o.decomposition | frozenset(o.order) != b.elements:
        raise ValueError("ordering does not enumerate the building set members exactly once")
    family = set(o.decomposition)
    for j, member in enumerate(o.order, start=1):
        if member in family or not _can_append(family, member):
            raise ValueError(f"ordering prefix {j} is not a flag building set")
        family.add(member)


def u_set(o: FlagOrdering, j: int) -> tuple[int, ...]:
    """Earlier indices whose member leaves a residue no earlier member matched.

    i < j qualifies when I_i is not inside I_j and no member of the family
    before I_i has the same difference with I_j as I_i does.
    """
    if not 1 <= j <= o.k:
        raise ValueError(f"ordering index {j} out of range 1..{o.k}")
    ij = o.order[j - 1]
    out = []
    for i in range(1, j):
        ii = o.order[i - 1]
        if ii <= ij:
            continue
        family = o.prefix_elements(i - 1)
        if not any(x - ij == ii - ij for x in family):
            out.append(i)
    return tuple(out)


def v_set(o: FlagOrdering, j: int) -> tuple[int, ...]:
    """Earlier indices i with I_i strictly sandwiched inside I_j by a yet earlier member."""
    if not 1 <= j <= o.k:
        raise ValueError(f"ordering index {j} out of range 1..{o.k}")
    ij = o.order[j - 1]
    out = []
    for i in range(1, j):
        ii = o.order[i - 1]
        if not ii <= ij:
            continue
        family = o.prefix_elements(i - 1)
        if any(ii < x < ij for x in family):
            out.append(i)
    return tuple(out)


def gamma_complex_of_ordering(o: FlagOrdering) -> FlagComplex:
    """Graph on vertex indices 1..k; i ~ j exactly when i is in U_j or V_j."""
    edges = []
    for j in range(1, o.k + 1):
        for i in set(u_set(o, j)) | set(v_set(o, j)):
            edges.append((i, j))
    return FlagComplex(range(1, o.k + 1), edges)


def nested_set_faces(b: BuildingSet) -> FaceComplex:
    """Explicit complex of nested sets of a connected building set.

    A nested set is a family of members (the ground set excluded) that is
    pairwise comparable-or-disjoint and in which no two or more pairwise
    disjoint members union to a member.
    """
    if not b.is_connected():
        raise ValueError("nested set complex needs a connected building set")
    verts = sorted(b.elements - {b.ground}, key=_skey)
    compatible = {
        (x, y)
        for x, y in combinations(verts, 2)
        if x <= y or y <= x or (not (x & y) and (x | y) not in b.elements)
    }
    compatible |= {(y, x) for x, y in compatible}

    faces: list[frozenset] = [frozenset()]

    def blocked(clique: tuple, new: Subset) -> bool:
        disjoint = [x for x in clique if not (x & new)]
        for r in range(1, len(disjoint) + 1):
            for group in combinations(disjoint, r):
                if all(not (x & y) for x, y in combinations(group, 2)):
                    union = new.union(*group)
                    if union in b.elements:
                        return True
        return False

    def grow(clique: tuple, candidates: list) -> None:
        for idx, v in enumerate(candidates):
            if blocked(clique, v):
                continue
            cur = clique + (v,)
            faces.append(frozenset(cur))
            nxt = [u for u in candidates[idx + 1 :] if (v, u) in compatible]
            if nxt:
                grow(cur, nxt)

    grow((), verts)
    return FaceComplex(verts, faces)


def nested_set_complex(b: BuildingSet) -> FlagComplex:
    """1-skeleton of the nested-set complex, valid for flag building sets only.

    The explicit face set is built first and checked to be flag, so a
    non-flag input cannot slip through and silently lose faces.
    """
    fc = nested_set_faces(b)
    if not is_flag(fc):
        raise ValueError("nested sets are not the cliques of their 1-skeleton: building set is not flag")
    return fc.one_skeleton()


def _decomposition_children(decomposition: frozenset[Subset], target: Subset) -> tuple[Subset, Subset]:
    for part in decomposition:
        if part < target and (target - part) in decomposition:
            small, big = sorted((part, target - part), key=_skey)
            return small, big
    raise ValueError(f"{sorted(target)} has no split inside the decomposition")


def sibling_pairs(decomposition: frozenset[Subset]) -> list[tuple[Subset, Subset]]:
    """Child pairs of the decomposition tree, ordered by their union's (size, lex)."""
    pairs = [
        _decomposition_children(decomposition, t)
        for t in decomposition
        if len(t) > 1
    ]
    return sorted(pairs, key=lambda p: _skey(p[0] | p[1]))


def decomposition_vertex_ids(decomposition: frozenset[Subset]) -> dict[Subset, int]:
    """Canonical cross-polytope ids: the i-th sibling pair becomes (2i, 2i+1)."""
    ids: dict[Subset, int] = {}
    for i, (small, big) in enumerate(sibling_pairs(decomposition)):
        ids[small] = 2 * i
        ids[big] = 2 * i + 1
    return ids


def ordering_to_sequence(o: FlagOrdering) -> tuple[SubdivisionSequence, dict[Subset, int]]:
    """Translate a flag ordering into an edge-subdivision sequence.

    The decomposition's nested-set complex, relabeled onto canonical ids,
    is the starting cross-polytope; adding I_j subdivides the edge between
    its unique two-part split in the previous prefix, and the new vertex
    stands for I_j.  Returns the sequence and the member-to-vertex map.
    """
    b = o.building_set
    if b.n < 2:
        raise ValueError("ground set must have at least 2 elements")
    ids = decomposition_vertex_ids(o.decomposition)
    d = b.n - 1
    start = nested_set_complex(BuildingSet(b.n, o.decomposition)).relabel(
        {e: ids[e] for e in o.decomposition - {b.ground}}
    )
    if start != cross_polytope(d):
        raise RuntimeError("internal inconsistency: decomposition complex is not a cross polytope")
    seq = new_sequence(d)
    for j, member in enumerate(o.order, start=1):
        options = _splits(member, o.prefix_elements(j - 1))
        if len(options) != 1:
            raise ValueError(
                f"member {sorted(member)} has {len(options)} two-part splits "
                f"in its prefix; expected exactly one"
            )
        small, big = options[0]
        seq = extend(seq, (ids[small], ids[big]))
        ids[member] = seq.steps[-1].new_vertex
    return seq, ids


def verify_ordering_equivalence(o: FlagOrdering) -> dict:
    """Check the two gamma-complex constructions against each other.

    Verifies, exactly: the sequence's final complex is the building set's
    nested-set complex under the accumulated vertex map; at every step the
    new vertex's frozen K-set matches the U/V prediction; the two gamma
    complexes are isomorphic under w_j -> v(I_j); and f of the gamma
    complex equals gamma of the final complex.
    """
    b = o.building_set
    seq, ids = ordering_to_sequence(o)

    bridge = seq.final == nested_set_complex(b).relabel(
        {e: ids[e] for e in b.elements - {b.ground}}
    )

    uv_match = True
    for j, (step, snap) in enumerate(zip(seq.steps, seq.k_snapshots), start=1):
        a, c = step.edge
        frozen_k = {seq.w_index(x) for x in snap[a] & snap[c]}
        if frozen_k != set(u_set(o, j)) | set(v_set(o, j)):
            uv_match = False

    gc_seq = gamma_complex(seq)
    gc_ord = gamma_complex_of_ordering(o)
    isomorphic = is_isomorphic_under(
        gc_seq, gc_ord, {seq.w_id(j): j for j in range(1, seq.k + 1)}
    )

    f_gamma = f_from_counts(gc_seq.clique_count_by_size())
    gamma_theta = gamma_of(seq.final, seq.d).gamma
    return {
        "n": b.n,
        "d": seq.d,
        "k": seq.k,
        "f_gamma": f_gamma.to_list(),
        "gamma_theta": gamma_theta.to_list(),
        "equal": f_gamma == gamma_theta,
        "isomorphic": isomorphic,
        "uv_match": uv_match,
        "bridge": bridge,
    }


def power_set_building_set(n: int) -> BuildingSet:
    """All nonempty subsets of the ground set."""
    if n < 1:
        raise ValueError("ground set must be nonempty")
    ground = list(range(1, n + 1))
    elements = [c for r in range(1, n + 1) for c in combinations(ground, r)]
    return BuildingSet.of(n, elements)


def interval_building_set(n: int) -> BuildingSet:
    """All intervals {i, i+1, ..., j} of the ground set."""
    if n < 1:
        raise ValueError("ground set must be nonempty")
    elements = [range(i, j + 1) for i in range(1, n + 1) for j in range(i, n + 1)]
    return BuildingSet.of(n, elements)


def random_flag_building_set(n: int, seed: int) -> BuildingSet:
    """Random connected flag building set, grown from a random decomposition.

    Every intermediate family is itself a connected flag building set, so
    the result always validates; deterministic in the seed.
    """
    if n < 2:
        raise ValueError("need a ground set of at least 2 elements")
    rng = random.Random(seed)
    elements: set[Subset] = set()

    def split(target: Subset) -> None:
        elements.add(target)
        if len(target) == 1:
            return
        members = sorted(target)
        cut = rng.randint(1, len(members) - 1)
        chosen = frozenset(rng.sample(members, cut))
        split(chosen)
        split(target - chosen)

    split(frozenset(range(1, n + 1)))
    ground = frozenset(range(1, n + 1))
    all_subsets = [
        frozenset(c)
        for r in range(2, n)
        for c in combinations(sorted(ground), r)
    ]
    additions = rng.randint(0, len(all_subsets))
    for _ in range(additions):
        candidates = sorted(
            (s for s in all_subsets if s not in elements and _can_append(elements, s)),
            key=_skey,
        )
        if not candidates:
            break
        elements.add(rng.choice(candidates))
    return BuildingSet(n, frozenset(elements))
