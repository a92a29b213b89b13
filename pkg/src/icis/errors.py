"""Exception hierarchy shared across the library and the CLI.

Every error the CLI can surface carries a machine-readable ``code`` so
problem files can be regression-tested against specific failure modes.
"""


class IcisError(Exception):
    code = "error"


class RingMismatchError(IcisError):
    """Operands live over different variable lists."""

    code = "ring-mismatch"


class UnknownVariableError(IcisError):
    """A named variable is not part of the polynomial's ring."""

    code = "unknown-variable"


class ZeroInputError(IcisError):
    """An operation that requires a nonzero polynomial got zero."""

    code = "zero-input"


class BudgetExhaustedError(IcisError):
    """The reduction step budget ran out before completion.

    Raised instead of returning a possibly wrong answer.
    """

    code = "budget-exhausted"

    def __init__(self, message="step budget exhausted"):
        super().__init__(message)


class NonIsolatedError(IcisError):
    """A colength that should be finite came out infinite."""

    code = "non-isolated"


class GenericityError(IcisError):
    """All seeded recombinations of the defining equations failed to
    produce finite intermediate colengths in the Milnor-number chain."""

    code = "genericity-failure"


class UnsupportedInputError(IcisError):
    """Input is outside the supported desk-scale class (e.g. a
    discriminant eliminant that is not principal)."""

    code = "unsupported-input"


class InconclusiveError(IcisError):
    """A verdict cannot be reached honestly (e.g. the critical points of
    a family do not all converge to the origin, so affine totals do not
    stand in for Milnor-ball totals)."""

    code = "inconclusive"


class ProblemFileError(IcisError):
    """Base class for problem-file validation failures."""

    code = "input-error"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ProblemSyntaxError(ProblemFileError):
    code = "syntax-error"


class UnboundNameError(ProblemFileError):
    code = "unbound-name"


class MissingParameterError(ProblemFileError):
    code = "missing-parameter"
