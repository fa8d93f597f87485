import fractions
import unittest

import hypothesis
import hypothesis.strategies as st

import symrmt.exceptions
from symrmt import characters, mops, moments, partitions
from symrmt.algebra import N, PolyN
from symrmt.mops import EnsembleSpec

F = fractions.Fraction

HERMITE = EnsembleSpec.hermite()


@st.composite
def laguerre_strat(draw):
    numerator = draw(st.integers(min_value=-3, max_value=12))
    return EnsembleSpec.laguerre(F(numerator, 4))


@st.composite
def jacobi_strat(draw):
    gamma1 = F(draw(st.integers(min_value=-2, max_value=8)), 3)
    gamma2 = F(draw(st.integers(min_value=-2, max_value=8)), 3)
    return EnsembleSpec.jacobi(gamma1, gamma2)


class TestHermiteMoments(unittest.TestCase):
    def test_trace_moments(self):
        cases = [
            ((2,), N ** 2),
            ((4,), 2 * N ** 3 + N),
            ((6,), 5 * N ** 4 + 10 * N ** 2),
            ((1, 1), N),
            ((3, 3), 12 * N ** 3 + 3 * N),
            ((), PolyN.constant(1)),
        ]
        for mu, expected in cases:
            result = moments.trace_joint_moment(HERMITE, mu)
            msg = "Expected E[p{}] = {}".format(mu, expected)
            self.assertEqual(result.value, expected, msg)
            self.assertTrue(result.symbolic)

    def test_odd_weight_vanishes(self):
        for mu in [(3,), (2, 1), (5, 1, 1)]:
            self.assertEqual(moments.trace_joint_moment(HERMITE, mu).value, 0)

    def test_fixed_n(self):
        result = moments.trace_joint_moment(HERMITE, (4,), 3)
        self.assertFalse(result.symbolic)
        self.assertEqual(result.value, 57)
        self.assertEqual(result.at(3), 57)

    def test_schur_moments(self):
        cases = [
            ((2,), N * (N + 1) / 2),
            ((1, 1), -N * (N - 1) / 2),
            ((2, 2), (N - 1) * N ** 2 * (N + 1) / 4),
            ((3,), PolyN()),
        ]
        for lam, expected in cases:
            result = moments.schur_moment(HERMITE, lam)
            self.assertEqual(result.value, expected)

    def test_parity_and_degree(self):
        for weight in range(2, 9, 2):
            for mu in partitions.partitions_of(weight):
                value = moments.trace_joint_moment(HERMITE, mu).value
                top = weight // 2 + len(mu)
                msg = "E[p{}] = {}".format(mu, value)
                self.assertLessEqual(value.degree, top, msg)
                self.assertEqual(value.parity(), top % 2, msg)
                if all(part % 2 == 0 for part in mu):
                    self.assertEqual(value.degree, top, msg)

    def test_squares_have_the_highest_degree(self):
        for half in range(1, 5):
            squares = (2,) * half
            top = moments.trace_joint_moment(HERMITE, squares).value.degree
            for mu in partitions.partitions_of(2 * half):
                if mu == squares:
                    continue
                value = moments.trace_joint_moment(HERMITE, mu).value
                msg = "E[p{}] = {}".format(mu, value)
                self.assertGreater(top, value.degree, msg)


class TestLaguerreMoments(unittest.TestCase):
    def test_first_moments(self):
        gamma = F(1, 2)
        lue = EnsembleSpec.laguerre(gamma)
        self.assertEqual(
            moments.trace_joint_moment(lue, (1,)).value, N * (N + gamma)
        )
        self.assertEqual(
            moments.trace_joint_moment(lue, (2,)).value,
            N * (N + gamma) * (2 * N + gamma),
        )

    @hypothesis.given(laguerre_strat(), st.integers(min_value=1, max_value=5))
    def test_one_by_one(self, lue, k):
        value = moments.trace_joint_moment(lue, (k,), 1).value
        self.assertEqual(value, mops.univariate_moment(lue, k))


class TestJacobiMoments(unittest.TestCase):
    def test_symbolic_rejected(self):
        jue = EnsembleSpec.jacobi(0, 0)
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            moments.trace_joint_moment(jue, (1,))
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            moments.schur_moment(jue, (1,))

    @hypothesis.given(jacobi_strat(), st.integers(min_value=1, max_value=5))
    def test_one_by_one(self, jue, k):
        value = moments.trace_joint_moment(jue, (k,), 1).value
        self.assertEqual(value, mops.univariate_moment(jue, k))

    def test_first_moment(self):
        jue = EnsembleSpec.jacobi(F(1, 2), 2)
        expected = (F(1, 2) + 1) / (F(1, 2) + 2 + 2)
        value = moments.trace_joint_moment(jue, (1,), 1).value
        self.assertEqual(value, expected)

    def test_symmetric_weight_has_mean_half(self):
        jue = EnsembleSpec.jacobi(1, 1)
        for n in range(1, 4):
            value = moments.trace_joint_moment(jue, (1,), n).value
            self.assertEqual(value, F(n, 2))


class TestBasisConsistency(unittest.TestCase):
    def test_character_sum_of_schur_moments(self):
        n = 4
        families = [
            HERMITE,
            EnsembleSpec.laguerre(F(1, 2)),
            EnsembleSpec.jacobi(F(1, 3), F(1, 4)),
        ]
        for family in families:
            for weight in range(1, 5):
                table = characters.character_table(weight)
                for mu in table.classes:
                    expected = sum(
                        table.value(lam, mu)
                        * moments.schur_moment(family, lam, n).value
                        for lam in table.classes
                    )
                    computed = moments.trace_joint_moment(family, mu, n)
                    self.assertEqual(computed.value, expected)


class TestCharpoly(unittest.TestCase):
    def test_examples(self):
        cases = [
            (HERMITE, 2, [F(0)], F(-1)),
            (HERMITE, 1, [F(7, 3)], F(7, 3)),
            (EnsembleSpec.laguerre(0), 1, [F(0)], F(-1)),
            (HERMITE, 1, [F(2), F(5)], F(11)),
        ]
        for ensemble, n, t, expected in cases:
            msg = "{} N={} t={}".format(ensemble, n, t)
            self.assertEqual(
                moments.charpoly_moment(ensemble, n, t), expected, msg
            )

    def test_jacobi_single_matrix(self):
        jue = EnsembleSpec.jacobi(F(1, 3), F(1, 4))
        mean = (F(1, 3) + 1) / (F(1, 3) + F(1, 4) + 2)
        self.assertEqual(moments.charpoly_moment(jue, 1, [F(3)]), 3 - mean)

    def test_matches_monic_polynomial(self):
        for n in range(1, 5):
            op = mops.univariate_coeffs(HERMITE, n)
            for t in [F(0), F(1, 2), F(-3)]:
                self.assertEqual(
                    moments.charpoly_moment(HERMITE, n, [t]), op.evaluate(t)
                )

    def test_power_moment(self):
        self.assertEqual(
            moments.charpoly_power_moment(HERMITE, 1, 2), [1, 0, 1]
        )
        self.assertEqual(
            moments.charpoly_power_moment(HERMITE, 2, 2)[0], 3
        )

    def test_power_one_matches_points(self):
        for ensemble in [HERMITE, EnsembleSpec.laguerre(2)]:
            coeffs = moments.charpoly_power_moment(ensemble, 3, 1)
            poly = PolyN.from_coeffs(coeffs)
            for t in [F(0), F(5, 2)]:
                self.assertEqual(
                    poly.evaluate(t),
                    moments.charpoly_moment(ensemble, 3, [t]),
                )

    def test_preconditions(self):
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            moments.charpoly_moment(HERMITE, 2, [1, 1])
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            moments.charpoly_moment(HERMITE, 2, [1, 2, 3, 4, 5, 6])
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            moments.charpoly_moment(HERMITE, 0, [1])
        with self.assertRaises(symrmt.exceptions.BoundExceeded):
            moments.charpoly_power_moment(HERMITE, 16, 2)


class TestClosedForms(unittest.TestCase):
    def test_double_factorial(self):
        cases = [(-1, 1), (0, 1), (5, 15), (6, 48)]
        for k, expected in cases:
            self.assertEqual(moments.double_factorial(k), expected)

    def test_hypergeometric(self):
        self.assertEqual(moments.hypergeometric_2f1(0, 3, 2, 5), 1)
        self.assertEqual(
            moments.hypergeometric_2f1(-1, 3, 2, 2), 1 - F(3 * 2, 2)
        )
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            moments.hypergeometric_2f1(1, 1, 1, 1)

    def test_even_trace_hypergeometric(self):
        self.assertEqual(moments.gue_even_trace_hypergeom(2, 1), 3)
        for n in range(1, 7):
            self.assertEqual(moments.gue_even_trace_hypergeom(1, n), n ** 2)
            self.assertEqual(
                moments.gue_even_trace_hypergeom(3, n),
                5 * n ** 2 * (n ** 2 + 2),
            )

    def test_even_trace_polynomial(self):
        for j in range(0, 5):
            self.assertEqual(
                moments.even_trace_polynomial(j),
                moments.trace_joint_moment(HERMITE, (2 * j,)).value
                if j
                else N,
            )

    def test_odd_pair_identity(self):
        for k in range(1, 5):
            for n in range(1, 5):
                self.assertTrue(moments.gue_odd_pair_identity(k, n))
