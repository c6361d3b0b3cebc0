"""Independent brute-force oracles shared by the test modules.

These deliberately avoid the library's clique-enumeration and transform
code paths: face counts come from enumerating every vertex subset, and
the h-transform comes from expanding sum_i f_i t^i (1-t)^(d-i) with
plain polynomial arithmetic.
"""

from itertools import combinations, permutations
from random import Random

from gammacomplex import FlagComplex, IntPolynomial, extend, new_sequence


def brute_force_face_counts(c: FlagComplex) -> dict[int, int]:
    """Count cliques of each size by checking every vertex subset."""
    vs = sorted(c.vertices, key=repr)
    counts = {0: 1}
    for r in range(1, len(vs) + 1):
        n = 0
        for sub in combinations(vs, r):
            if all(c.has_edge(a, b) for a, b in combinations(sub, 2)):
                n += 1
        if n:
            counts[r] = n
    return counts


def brute_force_f(c: FlagComplex) -> IntPolynomial:
    counts = brute_force_face_counts(c)
    return IntPolynomial(counts.get(i, 0) for i in range(max(counts) + 1))


def h_by_expansion(f: IntPolynomial, d: int) -> IntPolynomial:
    """sum_i f_i t^i (1-t)^(d-i), multiplied out exactly."""
    one_minus_t = IntPolynomial([1, -1])
    total = IntPolynomial()
    for i in range(f.degree + 1):
        term = IntPolynomial([f.coeff(i)]).shift(i)
        for _ in range(d - i):
            term = term * one_minus_t
        total = total + term
    return total


def random_flag_graph(rng: Random, max_vertices: int = 5) -> FlagComplex:
    """Random graph on a random small vertex set (labels offset to allow joins)."""
    n = rng.randint(0, max_vertices)
    offset = rng.randint(0, 50) * 100
    vs = [offset + i for i in range(n)]
    edges = [(a, b) for a, b in combinations(vs, 2) if rng.random() < 0.5]
    return FlagComplex(vs, edges)


def sequence_from_edges(d: int, edges) -> "SubdivisionSequence":
    seq = new_sequence(d)
    for e in edges:
        seq = extend(seq, e)
    return seq


def all_bijections(src, dst):
    src = sorted(src)
    for perm in permutations(sorted(dst, key=repr)):
        yield dict(zip(src, perm))
