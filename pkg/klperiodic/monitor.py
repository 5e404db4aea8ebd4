"""
Monitor verification activity

Running a verification suite reports its progress through a monitor
object that implements the `BaseMonitor` interface. While a suite runs,
various functions are called on the monitor object at certain events.
Consult the `BaseMonitor` class for the description of all available
events.
"""

import abc
import os
import sys

from typing import Dict


RESET = "\033[0m"
BOLD = "\033[1m"
RED = "\033[31m"
GREEN = "\033[32m"


class TextWriter:
    """Helper class for writing text to file descriptors"""
    def __init__(self, fd: int):
        self.fd = fd
        self.isatty = os.isatty(fd)

    def term(self, text, *, clear=False):
        """Write text if attached to a terminal."""
        if not self.isatty:
            return

        if clear:
            self.write(RESET)

        self.write(text)

    def write(self, text: str):
        """Write all of text to the log file descriptor"""
        data = text.encode("utf-8")
        while data:
            k = os.write(self.fd, data)
            data = data[k:]


class BaseMonitor(abc.ABC):
    """Base class for all verification monitors"""

    def __init__(self, fd: int):
        """Logging will be done to file descriptor `fd`"""
        self.out = TextWriter(fd)

    def begin(self, suite):
        """Called once before the first check of a suite"""

    def check(self, check):
        """Called when a check is about to run"""

    def result(self, result):
        """Called when a check is done with its result"""

    def log(self, message: str):
        """Called for free-form progress messages"""

    def finish(self, report: Dict):
        """Called at the very end of the run"""


class NullMonitor(BaseMonitor):
    """Monitor class that does not report anything"""


class LogMonitor(BaseMonitor):
    """Monitor that prints one line per check

    A bold header names the suite, every check is followed by its
    status and duration, and failed checks show their witness.
    The constructor argument `fd` is a file descriptor, where
    the log will get written to. If `fd` is a `TTY`, escape
    sequences will be used to highlight the output.
    """

    def begin(self, suite):
        self.out.term(BOLD, clear=True)
        self.out.write(f"Suite {suite.name}: {len(suite.checks)} checks")
        self.out.term(RESET)
        self.out.write("\n")

    def check(self, check):
        self.out.write(f"  {check.check_id} ... ")

    def result(self, result):
        if result.success:
            self.out.term(GREEN)
            self.out.write("pass")
        else:
            self.out.term(BOLD + RED)
            self.out.write("FAIL")
        self.out.term(RESET)
        floor = "" if result.floor is None else f", floor {result.floor}"
        self.out.write(f" ({result.duration:.2f}s{floor})\n")
        if not result.success and result.witness is not None:
            self.out.write(f"    witness: {result.witness}\n")

    def log(self, message):
        self.out.write(message)

    def finish(self, report):
        failed = [c for c in report["checks"] if c["status"] != "pass"]
        self.out.term(BOLD, clear=True)
        self.out.write(f"{len(report['checks']) - len(failed)} passed, {len(failed)} failed")
        self.out.term(RESET)
        self.out.write("\n")


def make(name, fd):
    module = sys.modules[__name__]
    monitor = getattr(module, name, None)
    if not monitor:
        raise ValueError(f"Unknown monitor: {name}")
    if not isinstance(monitor, type) or not issubclass(monitor, BaseMonitor):
        raise ValueError(f"Invalid monitor: {name}")
    return monitor(fd)
