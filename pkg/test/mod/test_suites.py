#
# Tests for the `klperiodic.suites` module.
#

import unittest

from klperiodic import suites
from klperiodic.alcove import AlcoveSpace
from klperiodic.coxeter import CartanDatum
from klperiodic.formats import v1 as fmt
from klperiodic.meta import Index
from klperiodic.monitor import NullMonitor
from .. import test


class TestSuites(test.TestBase):
    def setUp(self):
        self.monitor = NullMonitor(0)
        self.index = Index()

    def run_suite(self, name, type_label="A2", **kwargs):
        config = self.config(type_label=type_label, suite=name, **kwargs)
        report = suites.run(name, config, self.monitor)
        self.assertTrue(fmt.validate(fmt.output(report), self.index))
        return report

    def test_names(self):
        names = suites.suite_names()
        self.assertEqual(names[-1], "all")
        self.assertEqual(set(names[:-1]), set(suites.SUITES))

    def test_rank_one(self):
        report = self.run_suite("a1", "A1")
        self.assertTrue(report["success"])
        ids = [c["check_id"] for c in report["checks"]]
        self.assertEqual(ids, sorted(ids))
        self.assertIn("a1.theta_alcoves", ids)
        for check in report["checks"]:
            self.assertEqual(check["status"], "pass")
            self.assertNotIn("witness", check)

    def test_padic(self):
        report = self.run_suite("padic")
        self.assertTrue(report["success"])
        checks = {c["check_id"]: c for c in report["checks"]}
        # the conductor 0 check passes by finding the expected witness
        zero = checks["padic.intertwine_conductor_zero"]
        self.assertEqual(zero["status"], "pass")
        self.assertEqual(zero["witness"]["found"], {"sharp": -1, "box": [0, 0]})

    def test_star(self):
        for label in ("A2", "B2"):
            with self.subTest(label=label):
                report = self.run_suite("star", label, radius=6)
                self.assertTrue(report["success"])

    def test_kls(self):
        report = self.run_suite("kls", "B2")
        self.assertTrue(report["success"])
        self.assertEqual(report["type"], "B2")
        self.assertEqual(len(report["checks"]), 6)

    def test_m0(self):
        # the finite submodule is closed under T_s and theta_i near e
        for label, radius in (("A2", 6), ("B2", 8)):
            with self.subTest(label=label):
                report = self.run_suite("m0", label, radius=radius)
                self.assertTrue(report["success"])
                ids = [c["check_id"] for c in report["checks"]]
                self.assertEqual(ids, ["m0.closure", "m0.count", "m0.rank"])
                for check in report["checks"]:
                    self.assertEqual(check["status"], "pass", check.get("witness"))

    def test_recurrence(self):
        # the last term is theta_s(A_ws); with theta_s(A_s) the identity breaks
        space = AlcoveSpace(CartanDatum.from_label("A2"))
        self.assertEqual(suites.recurrence_failures(space, 8), [])
        failures = suites.recurrence_failures(space, 8, literal=True)
        self.assertIn((space.group.gen(2), 1), failures)
        # w = e is the only case in rank one, where both forms coincide
        a1 = AlcoveSpace(CartanDatum.from_label("A1"))
        self.assertEqual(suites.recurrence_failures(a1, 8, literal=True), [])

    def test_unknown(self):
        with self.assertRaises(ValueError):
            suites.run("nope", self.config(), self.monitor)

    def test_error_outcome(self):
        # a check raising `ValueError` fails with the message as witness
        @suites.check("broken", "raises")
        def _raises(ctx):
            raise ValueError("no floor left")

        try:
            report = suites.run("broken", self.config(), self.monitor)
        finally:
            del suites.SUITES["broken"]

        self.assertFalse(report["success"])
        check, = report["checks"]
        self.assertEqual(check["check_id"], "broken.raises")
        self.assertEqual(check["status"], "fail")
        self.assertEqual(check["witness"], {"error": "no floor left"})

        output = fmt.output(report)
        self.assertFalse(output["success"])
        self.assertTrue(fmt.validate(output, self.index))


if __name__ == "__main__":
    unittest.main()
