import fractions
import math
import unittest

import hypothesis
import hypothesis.strategies as st

import symrmt.exceptions
from symrmt import characters, partitions


class TestCharacter(unittest.TestCase):
    def test_known_values(self):
        cases = [
            ((2, 1), (1, 1, 1), 2),
            ((2, 1), (2, 1), 0),
            ((2, 1), (3,), -1),
            ((2, 2), (2, 2), 2),
            ((3, 1), (2, 2), -1),
            ((1, 1, 1, 1), (4,), -1),
            ((4,), (2, 1, 1), 1),
            ((), (), 1),
        ]
        for lam, mu, expected in cases:
            msg = "Expected chi^{}_{} = {}".format(lam, mu, expected)
            self.assertEqual(characters.character(lam, mu), expected, msg)

    def test_weight_mismatch(self):
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            characters.character((2, 1), (2,))

    def test_dimensions(self):
        cases = [((3, 2), 5), ((2, 2), 2), ((4, 2, 1), 35), ((), 1)]
        for lam, expected in cases:
            self.assertEqual(characters.dim_irrep(lam), expected)

    @hypothesis.given(st.integers(min_value=1, max_value=8), st.data())
    def test_identity_class_gives_dimension(self, n, data):
        lam = data.draw(st.sampled_from(partitions.partitions_of(n)))
        self.assertEqual(
            characters.character(lam, (1,) * n), characters.dim_irrep(lam)
        )


class TestCharacterTable(unittest.TestCase):
    def test_table_of_s3(self):
        table = characters.character_table(3)
        self.assertEqual(table.classes, [(3,), (2, 1), (1, 1, 1)])
        self.assertEqual(table.row((3,)), [1, 1, 1])
        self.assertEqual(table.row((2, 1)), [-1, 0, 2])
        self.assertEqual(table.row((1, 1, 1)), [1, -1, 1])
        self.assertEqual(table.column((1, 1, 1)), [1, 2, 1])

    def test_to_json(self):
        obj = characters.character_table(2).to_json()
        self.assertEqual(
            obj,
            {
                "n": 2,
                "classes": ["2", "1,1"],
                "rows": {"2": [1, 1], "1,1": [-1, 1]},
            },
        )

    def test_rejects_empty(self):
        with self.assertRaises(symrmt.exceptions.PreconditionError):
            characters.character_table(0)

    def test_orthogonality(self):
        for n in range(1, 7):
            table = characters.character_table(n)
            for lam in table.classes:
                for nu in table.classes:
                    inner = sum(
                        fractions.Fraction(
                            table.value(lam, mu) * table.value(nu, mu),
                            partitions.z_centralizer(mu),
                        )
                        for mu in table.classes
                    )
                    msg = "Rows {} and {} of S_{}".format(lam, nu, n)
                    self.assertEqual(inner, 1 if lam == nu else 0, msg)

    def test_conjugation_sign(self):
        table = characters.character_table(5)
        for lam in table.classes:
            for mu in table.classes:
                sign = (-1) ** (5 - len(mu))
                self.assertEqual(
                    table.value(partitions.conjugate(lam), mu),
                    sign * table.value(lam, mu),
                )

    def test_squared_dimensions(self):
        for n in range(1, 8):
            total = sum(
                characters.dim_irrep(lam) ** 2
                for lam in partitions.partitions_of(n)
            )
            self.assertEqual(total, math.factorial(n))
