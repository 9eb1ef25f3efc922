"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command line driver:
1 for usage or input problems, 2 for mathematical failures.
"""


class MacdualError(Exception):
    exit_code = 2


class InputError(MacdualError, ValueError):
    """Malformed or inconsistent input (bad dimensions, options, ...)."""

    exit_code = 1


class DimensionMismatchError(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class NotHomogeneousError(InputError):
    pass


class OrderMismatchError(InputError):
    pass


class SingularMatrixError(MacdualError):
    pass


class PointNotOnVarietyError(MacdualError):
    """A generator does not vanish at the requested point."""


class RankAmbiguityError(MacdualError):
    """A singular value fell inside the ambiguity band of the rank policy."""


class NonStabilizationError(MacdualError):
    pass


class RegularPositionError(MacdualError):
    """Eliminating dual space did not stabilize: the ideal is probably not in
    regular position with respect to the eliminated variables."""


class ContainmentError(MacdualError):
    """A containment guaranteed by theory failed numerically."""
