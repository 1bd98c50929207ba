"""Exceptions shared across the package.

Grouped by failure stage so the CLI can map them to exit codes: file
parsing (ParseError, exit 1), structural validation of complexes,
functions and vector fields (StructureError, exit 2), and mathematical
checks whose precondition or asserted conclusion fails (CheckError,
exit 3).
"""

from __future__ import annotations


class DmbError(Exception):
    """Base class for every error raised by this package."""


class ParseError(DmbError):
    """Malformed input text: unknown keyword, bad arity, bad literal."""

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class StructureError(DmbError):
    """Invalid complex, cell function, or vector field data."""


class DuplicateId(StructureError):
    pass


class DanglingReference(StructureError):
    pass


class GradingViolation(StructureError):
    """A covering pair whose dimensions do not differ by exactly one."""


class BoundarySquareNonzero(StructureError):
    """The composite boundary does not vanish; carries a witness pair."""


class RegularityInconsistent(StructureError):
    """A regular covering pair whose incidence number is not a unit."""


class EmptyIntervalViolation(StructureError):
    """A regular comparable pair with dimension gap >= 2 but no cell between."""


class UnknownCell(StructureError):
    pass


class NotComparable(StructureError):
    pass


class NotAFace(StructureError):
    pass


class EmptySimplex(StructureError):
    pass


class NotASubcomplex(StructureError):
    pass


class PartialFunction(StructureError):
    """A cell function that does not assign a value to every cell."""


class DomainMismatch(StructureError):
    """A cell function paired with a complex it was not built against."""


class InvalidField(StructureError):
    """A matching that violates one of the vector-field conditions."""


class CheckError(DmbError):
    """A mathematical precondition or asserted conclusion does not hold."""


class NotMorse(CheckError):
    pass


class NotMorseBott(CheckError):
    pass


class CellNotInCollection(CheckError):
    pass


class TrichotomyViolation(CheckError):
    """A cell counted as both upward and downward noncritical; the input
    function cannot be Morse-Bott."""


class SubcomplexViolation(CheckError):
    """A set expected to be a subcomplex (or to satisfy the associated
    level-value condition) is not; signals invalid input or a bug."""


class ClosedOrbitPresent(CheckError):
    pass


class NonUniqueCofacet(CheckError):
    """More than one noncritical cofacet where the theory guarantees one."""


class NotACycle(CheckError):
    pass


class FaceStructureViolation(CheckError):
    """A structural fact about regular face posets failed; carries a witness."""


class GenerationExhausted(CheckError):
    """A randomized generator hit its retry budget without success."""
