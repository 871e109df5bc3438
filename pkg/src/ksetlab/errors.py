"""
Exception hierarchy for ksetlab.

Library code raises these; the command line front end turns them into exit codes.
"""
from typing import Optional, Sequence


class KSetLabError(Exception):
    """Base class for every error raised by ksetlab"""
    pass


# Geometric kernel

class VerticalLineError(KSetLabError):
    """A line through two points sharing an x-coordinate was requested"""
    pass


class ParallelLinesError(KSetLabError):
    """Two distinct lines with equal slopes were intersected"""
    pass


class CoincidentLinesError(KSetLabError):
    """A line was intersected with itself"""
    pass


class DegenerateSegmentError(KSetLabError):
    """A segment was built from two equal endpoints"""
    pass


class BadKError(KSetLabError, ValueError):
    """k lies outside the range an operation accepts"""

    def __init__(self, k: int, low: int, high: int):
        self.k = k
        self.low = low
        self.high = high
        super().__init__(f"k={k} outside [{low}, {high}]")


def check_k(k: int, low: int, high: int) -> None:
    """Raise BadKError unless low <= k <= high"""
    if not low <= k <= high:
        raise BadKError(k, low, high)


# Instance input

class InstanceError(KSetLabError):
    """Invalid instance text or point set"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class InstanceSyntaxError(InstanceError):
    pass


class BadRationalError(InstanceError):
    pass


class CountMismatchError(InstanceError):
    pass


class GeneralPositionError(InstanceError):
    """Point set has a shared x-coordinate or a collinear triple"""

    def __init__(self, violations: Sequence, line_number: Optional[int] = None):
        self.violations = list(violations)
        shown = ", ".join(str(v) for v in self.violations[:5])
        more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
        super().__init__(f"general position violated: {shown}{more}", line_number)


class RetriesExhaustedError(KSetLabError):
    """Generator could not produce a general-position instance"""
    pass


# Pipeline integrity. These signal kernel bugs or a violated structural claim.

class CrossCheckMismatch(KSetLabError):
    """Primal and dual constructions disagree"""
    pass


class DecompositionError(KSetLabError):
    """The concave chain sweep reached an impossible state"""
    pass


class ChargeFailure(KSetLabError):
    """A common tangent has no eligible chain crossing to charge"""
    pass


class TangentViolation(KSetLabError):
    """A crossing of G did not dualize to a strict common tangent"""
    pass
