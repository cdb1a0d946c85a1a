"""
Exception hierarchy for threearc

Every error raised on purpose by the library derives from ThreeArcError.
The command-line front end maps the three families below to exit codes:
HypothesisError to 1, GraphFormatError/SettingsError to 2 and
ConstructionError to 3.
"""

from typing import Any, Optional


class ThreeArcError(Exception):
    """Base class for all threearc errors"""


class GraphFormatError(ThreeArcError):
    """Malformed graph or certificate text"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SettingsError(ThreeArcError):
    """Unreadable or invalid settings file"""


class GraphError(ThreeArcError):
    """A graph value violates the precondition of an operation"""


class MultiplicityError(GraphError):
    """Edge multiplicity missing or not positive"""


class TrailError(GraphError):
    """Malformed trail, or a visit that the trail does not induce"""


class SizeCapExceeded(ThreeArcError):
    """An iterated 3-arc graph would exceed the configured vertex cap"""


class OracleCapExceeded(ThreeArcError):
    """Input too large for the brute-force oracles"""


class HypothesisError(ThreeArcError):
    """The input graph does not satisfy the hypotheses of a construction

    Args:
        message: Human readable summary
        report: The condition or hypothesis report that failed
    """

    def __init__(self, message: str, report: Any = None):
        self.report = report
        super().__init__(message)


class ConstructionError(ThreeArcError):
    """Internal failure of a construction that should always succeed

    Carries a state dump for post-mortem debugging.
    """

    def __init__(self, message: str, dump: Optional[str] = None):
        self.dump = dump
        super().__init__(message)


class RepairError(ConstructionError):
    """The twin-visit repair loop did not converge"""


class UnhandledCaseError(ConstructionError):
    """A visit pattern outside the enumerated proof cases"""


class TrailExtensionError(ConstructionError):
    """A prescribed trail stub could not be extended to an Eulerian trail"""
