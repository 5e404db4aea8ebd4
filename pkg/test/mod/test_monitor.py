#
# Test for monitoring classes and integration
#

import io
import os
import sys
import tempfile
import unittest
from collections import defaultdict

from klperiodic import monitor, suites
from klperiodic.monitor import LogMonitor
from .. import test


class TapeMonitor(monitor.BaseMonitor):
    """Record the usage of all called functions"""
    def __init__(self):
        super().__init__(sys.stderr.fileno())
        self.counter = defaultdict(int)
        self.checks = set()
        self.results = set()
        self.report = None
        self.logger = io.StringIO()

    def begin(self, suite):
        self.counter["begin"] += 1

    def finish(self, report):
        self.counter["finish"] += 1
        self.report = report
        self.output = self.logger.getvalue()

    def check(self, check):
        self.counter["checks"] += 1
        self.checks.add(check.check_id)

    def result(self, result):
        self.counter["result"] += 1
        self.results.add(result.check_id)

    def log(self, message: str):
        self.counter["log"] += 1
        self.logger.write(message)


class TestMonitor(unittest.TestCase):
    def test_log_monitor_vfuncs(self):
        # Checks the basic functioning of the LogMonitor
        config = test.TestBase.config(suite="star", radius=4)

        with tempfile.TemporaryDirectory() as tmpdir:
            logfile = os.path.join(tmpdir, "log.txt")

            with open(logfile, "w") as log:
                res = suites.run("star", config, LogMonitor(log.fileno()))

            with open(logfile) as f:
                log = f.read()

        assert res["success"]
        self.assertIn("Type A2, floor 12, radius 4, seed 0\n", log)
        self.assertIn("Suite star: 4 checks", log)
        self.assertIn("star.stabilizers ... pass", log)
        self.assertIn("4 passed, 0 failed", log)
        # not a terminal, no escape sequences
        self.assertNotIn("\033[", log)

    def test_monitor_integration(self):
        # Checks the monitoring API is called properly from the suite runner
        config = test.TestBase.config(suite="star", radius=4)
        tape = TapeMonitor()
        res = suites.run("star", config, tape)

        assert res["success"]
        self.assertEqual(tape.counter["begin"], 1)
        self.assertEqual(tape.counter["finish"], 1)
        self.assertEqual(tape.counter["checks"], 4)
        self.assertEqual(tape.counter["result"], 4)
        self.assertEqual(tape.counter["log"], 1)
        self.assertTrue(tape.output.startswith("Type A2, floor 12, radius 4"))
        self.assertEqual(tape.checks, tape.results)
        self.assertIn("star.action", tape.checks)
        self.assertIs(tape.report, res)

    def test_make(self):
        null = monitor.make("NullMonitor", sys.stderr.fileno())
        self.assertIsInstance(null, monitor.NullMonitor)

        with self.assertRaises(ValueError):
            monitor.make("NoSuchMonitor", sys.stderr.fileno())
        with self.assertRaises(ValueError):
            monitor.make("TextWriter", sys.stderr.fileno())
