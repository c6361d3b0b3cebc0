"""Subdivision sequences: K-tables, face classes, induced sequences, gamma complex.

The worked three-step example on the d=4 cross polytope pins down the
expected values: ids 0..7 are the antipodal pairs (0,1), (2,3), (4,5),
(6,7) and the steps subdivide {0,2}, {4,6}, {0,9}, creating 8, 9, 10.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammacomplex import (
    FaceClass,
    FlagComplex,
    classify_face,
    cross_polytope,
    extend,
    gamma_complex,
    induced_sequence,
    k_set,
    link,
    new_sequence,
    phi,
    random_sequence,
    verify_f_equals_gamma,
    w_set,
)
from gammacomplex.checks import deep_report
from gammacomplex.subdivision import gamma_complex_from_snapshots, k_set_at
from helpers import sequence_from_edges

EXAMPLE_STEPS = [(0, 2), (4, 6), (0, 9)]

K_AFTER_STEP_1 = {0: [], 1: [], 2: [], 3: [], 4: [8], 5: [8], 6: [8], 7: [8], 8: []}
K_AFTER_STEP_2 = {
    0: [9], 1: [9], 2: [9], 3: [9],
    4: [8], 5: [8], 6: [8], 7: [8],
    8: [9], 9: [8],
}
K_AFTER_STEP_3 = {
    0: [9], 1: [9],
    2: [9], 3: [9, 10],
    4: [8, 10], 5: [8],
    6: [8, 10], 7: [8],
    8: [9, 10], 9: [8], 10: [],
}


@pytest.fixture(scope="module")
def example():
    return sequence_from_edges(4, EXAMPLE_STEPS)


class TestNewSequence:
    def test_d4_start(self):
        seq = new_sequence(4)
        assert seq.k == 0
        assert seq.final == cross_polytope(4)
        assert all(ks == frozenset() for ks in seq.k_table.values())
        assert gamma_complex(seq).vertices == frozenset()

    def test_d1_has_no_edges(self):
        seq = new_sequence(1)
        assert seq.final.edges() == []

    def test_d0_rejected(self):
        with pytest.raises(ValueError):
            new_sequence(0)


class TestExtend:
    def test_k_tables_of_the_example(self, example):
        for step_index, expected in ((1, K_AFTER_STEP_1), (2, K_AFTER_STEP_2), (3, K_AFTER_STEP_3)):
            table = example.k_tables[step_index]
            assert {v: sorted(ks) for v, ks in table.items()} == expected

    def test_snapshots_hold_pre_step_endpoint_values(self, example):
        assert example.k_snapshots[0] == {0: frozenset(), 2: frozenset()}
        assert example.k_snapshots[1] == {4: frozenset([8]), 6: frozenset([8])}
        assert example.k_snapshots[2] == {0: frozenset([9]), 9: frozenset([8])}

    def test_gamma_edges_of_the_example(self, example):
        assert example.gamma_edges == {(8, 9)}
        gc = gamma_complex(example)
        assert gc.vertices == {8, 9, 10}
        assert gc.edges() == [(8, 9)]

    def test_non_edge_rejected(self):
        seq = new_sequence(2)
        with pytest.raises(ValueError):
            extend(seq, (0, 1))

    def test_later_k_growth_adds_no_gamma_edges(self, example):
        # K(w1) ends as {9, 10} but the only gamma edge is the one recorded
        # when w2 was created
        assert example.k_table[8] == frozenset([9, 10])
        assert gamma_complex(example).neighbors(10) == frozenset()


class TestKSet:
    def test_example_values(self, example):
        assert k_set(example, {4}) == (8, 10)
        assert k_set(example, {0}) == (9,)
        assert k_set(example, {5}) == (8,)
        assert k_set(example, frozenset()) == (8, 9, 10)

    def test_intersection_of_vertex_sets(self, example):
        assert k_set(example, {4, 8}) == (10,)
        assert k_set(example, {3, 4}) == (10,)
        assert k_set(example, {8, 9}) == ()

    def test_non_face_rejected(self, example):
        with pytest.raises(ValueError):
            k_set(example, {0, 2})

    def test_prefix_values(self, example):
        assert k_set_at(example, 1, {4}) == (8,)
        assert k_set_at(example, 0, {4}) == ()
        assert k_set_at(example, 2, frozenset()) == (8, 9)


class TestClassifyFace:
    def test_example_classes(self, example):
        assert classify_face(example, {0}) is FaceClass.F1
        assert classify_face(example, {0, 10}) is FaceClass.F2
        assert classify_face(example, {10}) is FaceClass.F3
        assert classify_face(example, {3}) is FaceClass.F4
        assert classify_face(example, {1}) is FaceClass.F5
        assert classify_face(example, frozenset()) is FaceClass.F4

    def test_zero_steps_rejected(self):
        with pytest.raises(ValueError):
            classify_face(new_sequence(3), {0})

    def test_non_face_rejected(self, example):
        with pytest.raises(ValueError):
            classify_face(example, {0, 2})


class TestInducedSequence:
    def test_empty_face_gives_the_sequence_itself(self, example):
        ind = induced_sequence(example, frozenset())
        assert ind.base.steps == example.steps
        assert ind.w_labels == (8, 9, 10)
        assert ind.result() == example.final

    def test_new_vertex_link_is_a_zero_step_suspension(self, example):
        ind = induced_sequence(example, {10})
        assert ind.step_count == 0
        assert ind.result() == link(example.final, {10})
        assert ind.base.final == cross_polytope(3)

    def test_endpoint_face(self, example):
        ind = induced_sequence(example, {0})
        assert ind.w_labels == (10,)
        assert ind.result() == link(example.final, {0})

    def test_every_face_reproduces_its_link(self, example):
        for face in example.final.faces():
            assert induced_sequence(example, face).result() == link(example.final, face)

    def test_facet_links_are_empty(self, example):
        facet = next(f for f in example.final.faces() if len(f) == 4)
        ind = induced_sequence(example, facet)
        assert ind.base is None
        assert ind.w_labels == ()
        assert ind.result() == FlagComplex()


class TestWSetAndPhi:
    def test_example_values(self, example):
        assert w_set(example, {0}) == (10,)
        assert w_set(example, frozenset()) == (8, 9, 10)
        assert w_set(example, {10}) == ()
        assert w_set(example, {2}) == (9,)

    def test_sizes_match_k_sets_everywhere(self, example):
        for face in example.final.faces():
            assert len(w_set(example, face)) == len(k_set(example, face))

    def test_phi_is_identity_on_the_empty_face(self, example):
        assert phi(example, frozenset()) == {8: 8, 9: 9, 10: 10}

    def test_phi_on_an_endpoint(self, example):
        assert phi(example, {0}) == {9: 10}

    def test_phi_on_empty_k_set(self, example):
        assert phi(example, {10}) == {}


class TestRandomSequence:
    def test_same_seed_same_sequence(self):
        a = random_sequence(4, 6, 17)
        b = random_sequence(4, 6, 17)
        assert a.steps == b.steps

    def test_cycle_stays_a_cycle(self):
        seq = random_sequence(2, 3, 1)
        c = seq.final
        assert len(c.vertices) == 7
        assert all(len(c.neighbors(v)) == 2 for v in c.vertices)

    def test_zero_steps(self):
        assert random_sequence(4, 0, 3).final == cross_polytope(4)

    def test_d1_with_steps_rejected(self):
        with pytest.raises(ValueError):
            random_sequence(1, 1, 0)


class TestGammaComplex:
    def test_snapshot_recomputation_matches(self, example):
        assert gamma_complex_from_snapshots(example) == gamma_complex(example)

    def test_disjoint_edge_subdivisions_of_the_octahedron(self):
        # the second edge shares no endpoint with the first and its
        # endpoints never saw w1, so the gamma complex has no edge
        seq = sequence_from_edges(3, [(0, 2), (1, 3)])
        assert seq.k_table[7] == frozenset()
        assert gamma_complex(seq).edges() == []
        assert gamma_complex_from_snapshots(seq) == gamma_complex(seq)

    @given(st.integers(0, 5_000))
    @settings(max_examples=40, deadline=None)
    def test_snapshot_recomputation_matches_random(self, seed):
        seq = random_sequence(2 + seed % 4, seed % 8, seed)
        assert gamma_complex_from_snapshots(seq) == gamma_complex(seq)

    @given(st.integers(0, 5_000))
    @settings(max_examples=30, deadline=None)
    def test_prefixes_restrict_the_gamma_complex(self, seed):
        seq = random_sequence(2 + seed % 4, seed % 8, seed)
        prefix = new_sequence(seq.d)
        for j, step in enumerate(seq.steps, start=1):
            prefix = extend(prefix, step.edge)
            restricted = gamma_complex(seq).induced(seq.w_ids()[:j])
            assert gamma_complex(prefix) == restricted


class TestVerify:
    def test_example_verdict(self, example):
        report = verify_f_equals_gamma(example)
        assert report == {
            "d": 4,
            "k": 3,
            "f_gamma": [1, 3, 1],
            "gamma_theta": [1, 3, 1],
            "equal": True,
        }

    def test_zero_step_sequences(self):
        for d in (1, 2, 5):
            report = verify_f_equals_gamma(new_sequence(d))
            assert report["f_gamma"] == [1] and report["gamma_theta"] == [1]
            assert report["equal"]

    def test_json_round_trip(self, example):
        from gammacomplex import SubdivisionSequence

        again = SubdivisionSequence.from_json(example.to_json())
        assert again.steps == example.steps
        assert again.final == example.final

    def test_bad_step_names_its_index(self):
        from gammacomplex import SubdivisionSequence

        with pytest.raises(ValueError, match="step 2"):
            SubdivisionSequence.from_json('{"d": 2, "steps": [{"edge": [0, 2]}, {"edge": [0, 2]}]}')


class TestDeepChecks:
    def test_example_passes_all_suites(self, example):
        report = deep_report(example)
        assert all(report.values()), report

    @pytest.mark.parametrize("seed", [1, 2, 7, 11])
    def test_random_instances_pass_all_suites(self, seed):
        seq = random_sequence(2 + seed % 4, 2 + seed % 4, seed)
        report = deep_report(seq)
        assert all(report.values()), report
