"""Verification suites keyed to the structural claims about C_{v,w}."""

from .report import Assertion, SuiteReport
from .runner import SuiteRunner

__all__ = ["Assertion", "SuiteReport", "SuiteRunner"]
