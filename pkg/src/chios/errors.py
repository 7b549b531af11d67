"""Exception hierarchy.

Everything raised on purpose by the library derives from ``ChiosError`` so
callers (and the CLI) can separate domain failures from programming errors.
"""


class ChiosError(Exception):
    pass


class ElementOutOfRange(ChiosError, ValueError):
    pass


class ComparableCircuits(ChiosError, ValueError):
    pass


class CircuitElimination(ChiosError, ValueError):
    pass


class NotUnidependent(ChiosError, ValueError):
    pass


class LoopPresent(ChiosError, ValueError):
    pass


class LoopContraction(ChiosError, ValueError):
    pass


class NotAFlat(ChiosError, ValueError):
    pass


class DependentInput(ChiosError, ValueError):
    pass


class InconsistentSystem(ChiosError, ArithmeticError):
    """The ideal spanning set does not complement the nbc monomials."""


class NotInIdeal(ChiosError, ValueError):
    pass


class SizeMismatch(ChiosError, ValueError):
    pass


class NotDiagonal(ChiosError, ValueError):
    pass


class NotSimple(ChiosError, ValueError):
    pass


class NotAffineNormalized(ChiosError, ValueError):
    pass


class ParseError(ChiosError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(ChiosError, ValueError):
    """Inputs parse but do not fit together (e.g. a determinant chi-map
    requested for a bare circuit list)."""
