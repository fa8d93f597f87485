import fractions
import unittest

import hypothesis
import hypothesis.strategies as st

import symrmt.exceptions
from symrmt import fluctuations, moments, partitions, wick
from symrmt.algebra import N, LaurentPolyN
from symrmt.mops import EnsembleSpec

F = fractions.Fraction


@st.composite
def even_partition_strat(draw, max_weight=8):
    half = draw(st.integers(min_value=1, max_value=max_weight // 2))
    return draw(st.sampled_from(partitions.partitions_of(2 * half)))


class TestPairings(unittest.TestCase):
    def test_counts(self):
        for m, expected in [(0, 1), (2, 1), (4, 3), (6, 15), (8, 105)]:
            self.assertEqual(len(list(wick.pairings(m))), expected)
        self.assertEqual(list(wick.pairings(3)), [])

    def test_lexicographic_order(self):
        self.assertEqual(
            list(wick.pairings(4)),
            [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))],
        )

    def test_gaussian_moment(self):
        cases = [(0, 1), (1, 0), (2, 1), (4, 3), (6, 15), (7, 0)]
        for k, expected in cases:
            self.assertEqual(wick.gaussian_moment(k), expected)

    def test_trace_word(self):
        word = wick.TraceWord.build((2, 1))
        self.assertEqual(word.rotation, (1, 0, 2))
        self.assertEqual(word.vertex, (0, 0, 1))
        self.assertEqual(word.letters, 3)

    def test_faces_of_single_trace(self):
        word = wick.TraceWord.build((4,))
        faces = [wick.count_faces(word, p) for p in wick.pairings(4)]
        self.assertEqual(sorted(faces), [1, 3, 3])

    def test_connectivity(self):
        word = wick.TraceWord.build((2, 2))
        self.assertFalse(wick.is_connected(word, ((0, 1), (2, 3))))
        self.assertTrue(wick.is_connected(word, ((0, 2), (1, 3))))


class TestWickMoments(unittest.TestCase):
    def test_examples(self):
        cases = [
            ((2,), N ** 2),
            ((4,), 2 * N ** 3 + N),
            ((6,), 5 * N ** 4 + 10 * N ** 2),
            ((1, 1), N),
            ((3,), 0),
        ]
        for mu, expected in cases:
            self.assertEqual(wick.wick_trace_moment(mu), expected)

    def test_rescaled(self):
        self.assertEqual(
            wick.wick_trace_moment((2,), wick.RESCALED),
            LaurentPolyN.monomial(1, F(1, 4)),
        )
        self.assertEqual(
            wick.wick_trace_moment((1, 1), wick.RESCALED),
            LaurentPolyN.constant(F(1, 4)),
        )

    def test_connected(self):
        self.assertEqual(
            wick.wick_connected((2, 2)), LaurentPolyN.constant(F(1, 8))
        )
        self.assertEqual(
            wick.wick_connected((4,)),
            LaurentPolyN({1: F(1, 8), -1: F(1, 16)}),
        )
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            wick.wick_connected(())

    def test_genus_counts(self):
        self.assertEqual(wick.genus_counts((4,)), {0: 2, 1: 1})
        self.assertEqual(wick.genus_counts((6,)), {0: 5, 1: 10})
        self.assertEqual(wick.genus_counts((3,)), {})

    def test_unknown_convention(self):
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            wick.wick_trace_moment((2,), "scaled")

    def test_weight_bound(self):
        with self.assertRaises(symrmt.exceptions.BoundExceeded):
            wick.wick_trace_moment((14,))

    @hypothesis.settings(deadline=None)
    @hypothesis.given(even_partition_strat())
    def test_agrees_with_character_sums(self, mu):
        self.assertEqual(
            wick.wick_trace_moment(mu),
            moments.trace_joint_moment(EnsembleSpec.hermite(), mu).value,
        )

    @hypothesis.settings(deadline=None)
    @hypothesis.given(even_partition_strat())
    def test_connected_agrees_with_cumulants(self, mu):
        self.assertEqual(
            wick.wick_connected(mu),
            fluctuations.connected_correlator(mu).value,
        )
