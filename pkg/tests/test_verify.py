import contextlib
import io
import unittest

import numpy as np

from symrmt import report, verify


class ReportTest(unittest.TestCase):
    def setUp(self):
        report.reset()

    def tearDown(self):
        report.reset()


class TestReport(ReportTest):
    def test_record_and_compile(self):
        report.record(report.CheckResult("wick", "a", True, "1", "1"))
        report.record(report.CheckResult("wick", "b", False, "1", "2"))
        report.record(report.CheckResult("mc", "c", True, "0.5", "0.49"))
        self.assertEqual(report.checked(), 3)
        self.assertEqual([r.name for r in report.failures()], ["b"])
        compiled = report.compile()
        self.assertEqual(
            compiled["Suites"],
            [
                {"Suite": "wick", "Checked": 2, "Passed": 1, "Failed": 1},
                {"Suite": "mc", "Checked": 1, "Passed": 1, "Failed": 0},
            ],
        )
        self.assertEqual(
            compiled["Failed identities"],
            [
                {
                    "Suite": "wick",
                    "Identity": "b",
                    "Expected": "1",
                    "Computed": "2",
                }
            ],
        )

    def test_print_report(self):
        report.record(report.CheckResult("wick", "a", True, "1", "1"))
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            report.print_report()
        text = out.getvalue()
        self.assertIn("-- Suites:", text)
        self.assertNotIn("-- Failed identities:", text)
        self.assertIn("1 identities checked, 0 failed", text)

    def test_reset(self):
        report.record(report.CheckResult("wick", "a", False, "1", "2"))
        report.reset()
        self.assertEqual(report.checked(), 0)
        self.assertEqual(report.compile()["Suites"], [])


class TestSuites(ReportTest):
    def test_tables(self):
        for check in (
            verify._trace_table,
            verify._schur_table,
            verify._xk_table,
            verify._closed_forms,
            verify._chebyshev_structure,
        ):
            check(verify.GOLDEN_TABLES)
        self.assertGreater(report.checked(), 50)
        self.assertEqual(report.failures(), [])

    def test_table_sizes(self):
        self.assertEqual(len(verify.TRACE_TABLE), 11)
        self.assertEqual(len(verify.SCHUR_TABLE), 5)
        self.assertEqual(len(verify.XK_TABLE), 11)

    def test_character_invariants(self):
        verify._character_invariants(verify.GOLDEN_TABLES)
        self.assertEqual(report.checked(), 32)
        self.assertEqual(report.failures(), [])

    def test_wick_suite(self):
        self.assertTrue(verify.run(verify.WICK))
        suites = {row["Suite"] for row in report.compile()["Suites"]}
        self.assertEqual(suites, {verify.WICK})

    def test_failed_check_is_recorded(self):
        passed = verify._check("wick", "deliberately wrong", 1, 2)
        self.assertFalse(passed)
        self.assertEqual(report.failures()[0].computed, "2")

    def test_unknown_suite(self):
        with self.assertRaises(ValueError):
            verify.run("everything")

    def test_random_points(self):
        rng = np.random.default_rng(5)
        points = verify.random_points(rng, 4)
        self.assertEqual(len(set(points)), 4)
        for point in points:
            self.assertLessEqual(abs(point), 20)

    def test_monte_carlo_targets(self):
        targets = verify._mc_targets(samples=1000, seed=1, workers=2)
        self.assertEqual(len(targets), 9)
        semicircle = targets[-1]
        self.assertEqual(semicircle.config.n, 64)
        self.assertEqual(semicircle.config.samples, 200)
        for target in targets:
            self.assertEqual(target.config.seed, 1)
            self.assertEqual(target.config.workers, 2)
