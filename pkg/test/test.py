#
# Test Infrastructure
#

import contextlib
import json
import os
import subprocess
import sys
import tempfile
import unittest

from klperiodic.config import RunConfig


class TestBase(unittest.TestCase):
    """Base Class for Tests

    This class serves as base for our test infrastructure and provides access
    to common functionality.
    """

    @staticmethod
    def have_test_checkout() -> bool:
        """Check Test-Checkout Access

        Check whether the current test-run has access to a repository checkout
        of the project and tests. This is usually the guard around code that
        requires `locate_test_checkout()`.

        For now, we always require tests to be run from a checkout. Hence, this
        function will always return `True`. This might change in the future,
        though.
        """

        # Sanity test to verify we run from within a checkout.
        assert os.access("setup.py", os.R_OK)
        return True

    @staticmethod
    def locate_test_checkout() -> str:
        """Locate Test-Checkout Path

        This returns the path to the repository checkout we run against. This
        will fail if `have_test_checkout()` returns false.
        """

        assert TestBase.have_test_checkout()
        return os.getcwd()

    @staticmethod
    def config(command: str = "verify", type_label: str = "A2", **kwargs) -> RunConfig:
        """Run configuration for in-process tests

        Keyword arguments are passed through to `RunConfig`; the defaults
        match the command line defaults.
        """

        return RunConfig(command, type_label, **kwargs)


class KLPeriodic(contextlib.AbstractContextManager):
    """klperiodic Executor

    This class represents a context to execute the klperiodic command line
    tool. While entered it maintains a temporary output directory, so that
    tests can direct `--out` there and everything is torn down on exit.
    """

    _unittest = None
    _exitstack = None
    _outdir = None

    def __init__(self, unit_test):
        self._unittest = unit_test

    def __enter__(self):
        self._exitstack = contextlib.ExitStack()
        with self._exitstack:
            outdir = tempfile.TemporaryDirectory()
            self._outdir = self._exitstack.enter_context(outdir)

            # Keep our ExitStack for `__exit__()`.
            self._exitstack = self._exitstack.pop_all()

        return self

    def __exit__(self, exc_type, exc_value, exc_tb):
        with self._exitstack:
            pass

        self._outdir = None
        self._exitstack = None

    def path(self, name: str) -> str:
        """Path of `name` inside the temporary output directory"""
        return os.path.join(self._outdir, name)

    @staticmethod
    def _print_result(code, data_stdout, data_stderr):
        print(f"klperiodic failed with: {code}")
        print("-- STDOUT ------------------------------")
        print(data_stdout)
        print("-- STDERR ------------------------------")
        print(data_stderr)
        print("-- END ---------------------------------")

    def run(self, args, expect: int = 0):
        """Run the command line tool

        `args` are appended to `python3 -m klperiodic`. The exit code must
        equal `expect`; otherwise the output is printed and a test assertion
        is raised. Returns the standard output.
        """

        cmd_args = [sys.executable, "-m", "klperiodic"] + list(args)
        p = subprocess.run(cmd_args,
                           encoding="utf-8",
                           stdout=subprocess.PIPE,
                           stderr=subprocess.PIPE,
                           check=False)

        if p.returncode != expect:
            self._print_result(p.returncode, p.stdout, p.stderr)
            self._unittest.assertEqual(p.returncode, expect)

        return p.stdout

    def run_json(self, args, expect: int = 0):
        """Like `run()` but with `--json`, returning the decoded output"""
        return json.loads(self.run(list(args) + ["--json"], expect))
