import fractions
import unittest

import hypothesis
import hypothesis.strategies as st

import symrmt.exceptions
from symrmt import partitions, symfun
from symrmt.algebra import N

F = fractions.Fraction


@st.composite
def points_strat(draw, min_size=1, max_size=4, distinct=False):
    values = st.builds(
        F,
        st.integers(min_value=-9, max_value=9),
        st.integers(min_value=1, max_value=5),
    )
    return draw(
        st.lists(
            values,
            min_size=min_size,
            max_size=max_size,
            unique=distinct,
        )
    )


@st.composite
def partition_strat(draw, max_weight=6):
    n = draw(st.integers(min_value=0, max_value=max_weight))
    return draw(st.sampled_from(partitions.partitions_of(n)))


class TestParsePoints(unittest.TestCase):
    def test_parse_ok(self):
        self.assertEqual(symfun.parse_points("2,5"), [F(2), F(5)])
        self.assertEqual(symfun.parse_points("1/2, -3"), [F(1, 2), F(-3)])

    def test_parse_err(self):
        for case in ["", "1,,2", "a"]:
            with self.assertRaises(symrmt.exceptions.ParsingError):
                symfun.parse_points(case)


class TestElementary(unittest.TestCase):
    def test_power_sums(self):
        self.assertEqual(
            symfun.power_sums([1, 2, 3], 2), [F(3), F(6), F(14)]
        )

    def test_complete_and_elementary(self):
        x = [F(1), F(2), F(3)]
        self.assertEqual(symfun.complete_h(2, x), 25)
        self.assertEqual(symfun.elementary_e(2, x), 11)
        self.assertEqual(symfun.elementary_e(3, x), 6)
        self.assertEqual(symfun.elementary_e(4, x), 0)
        self.assertEqual(symfun.complete_h(-1, x), 0)
        self.assertEqual(symfun.complete_h(0, x), 1)

    def test_vandermonde(self):
        self.assertEqual(symfun.vandermonde([3, 1, 0]), (3 - 1) * 3 * 1)
        self.assertEqual(symfun.vandermonde([5]), 1)


class TestSchur(unittest.TestCase):
    def test_small_cases(self):
        x = [F(1), F(2), F(3)]
        self.assertEqual(symfun.schur_eval((1,), x), 6)
        self.assertEqual(symfun.schur_eval((1, 1), x), 11)
        self.assertEqual(symfun.schur_eval((2,), x), 25)
        self.assertEqual(symfun.schur_eval((), x), 1)
        self.assertEqual(symfun.schur_eval((1, 1, 1, 1), x), 0)

    def test_coincident_points(self):
        self.assertEqual(symfun.schur_eval((2, 1), [1, 1]), 2)
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            symfun.schur_bialternant((2, 1), [1, 1])

    @hypothesis.given(partition_strat(), points_strat(distinct=True))
    def test_jacobi_trudi_matches_bialternant(self, lam, x):
        self.assertEqual(
            symfun.schur_eval(lam, x), symfun.schur_bialternant(lam, x)
        )

    @hypothesis.given(partition_strat(max_weight=5), points_strat())
    def test_power_sums_expand_in_schur(self, mu, x):
        expansion = symfun.power_to_schur(mu)
        self.assertEqual(
            expansion.evaluate(lambda lam: symfun.schur_eval(lam, x)),
            symfun.power_eval(mu, x),
        )

    def test_schur_at_ones(self):
        self.assertEqual(symfun.schur_at_ones((2,)), N * (N + 1) / 2)
        self.assertEqual(symfun.schur_at_ones((1, 1)), N * (N - 1) / 2)
        for n in range(1, 4):
            self.assertEqual(
                symfun.schur_at_ones((2, 1)).evaluate(n),
                symfun.schur_eval((2, 1), [1] * n),
            )

    def test_schur_at_ones_by_characters(self):
        for weight in range(0, 7):
            for lam in partitions.partitions_of(weight):
                self.assertEqual(
                    symfun.schur_at_ones(lam),
                    symfun.schur_at_ones_by_characters(lam),
                )


class TestContentProducts(unittest.TestCase):
    def test_c_lambda(self):
        self.assertEqual(symfun.c_lambda((2, 1)), (N - 1) * N * (N + 1))
        self.assertEqual(symfun.c_lambda(()), 1)

    def test_skew_content_product(self):
        self.assertEqual(
            symfun.skew_content_product((2, 1), (1,)), (N + 1) * (N - 1)
        )
        self.assertEqual(
            symfun.skew_content_product((3, 2), (3, 2)), 1
        )

    def test_g_ratio(self):
        gamma = F(1, 2)
        self.assertEqual(
            symfun.g_ratio((1,), gamma), N + gamma
        )
        self.assertEqual(
            symfun.g_ratio((1, 1), 0), N * (N - 1)
        )
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            symfun.g_ratio((1,), -1)


class TestBasisExpansion(unittest.TestCase):
    def test_drops_zero_coefficients(self):
        expansion = symfun.BasisExpansion.build(
            symfun.SCHUR, {(2,): 1, (1, 1): 0}
        )
        self.assertEqual(expansion.coeffs, {(2,): 1})

    def test_unknown_basis(self):
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            symfun.BasisExpansion.build("monomial", {})

    def test_power_to_schur(self):
        expansion = symfun.power_to_schur((2,))
        self.assertEqual(expansion.coeffs, {(2,): 1, (1, 1): -1})
