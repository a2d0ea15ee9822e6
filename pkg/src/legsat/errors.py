"""Exception hierarchy. Every domain error derives from ``LegsatError``."""

from __future__ import annotations


class LegsatError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class NonPositiveInput(LegsatError):
    pass


class StrandMismatch(LegsatError):
    pass


class OrientationMismatch(LegsatError):
    pass


class ClosedWord(LegsatError):
    pass


class BudgetExhausted(LegsatError):
    pass


class MultiComponentCompanion(LegsatError):
    pass


class MultiComponentPattern(LegsatError):
    pass


class HypothesisNotDeclared(LegsatError):
    pass


class NonPositiveBraid(LegsatError):
    pass


class UnsupportedFamily(LegsatError):
    pass


class ParityViolation(LegsatError):
    pass


class EvenM(LegsatError):
    pass


class NotCoprime(LegsatError):
    pass


class InconsistentTable(LegsatError):
    """A count came out negative: the table and the declared hypotheses disagree."""
