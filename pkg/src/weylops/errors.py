"""Exception hierarchy shared across the package."""


class WeylOpsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(WeylOpsError):
    """A precondition on mathematical input was violated.

    Covers ring/arity mismatches, wrong characteristic, non-invertible
    maps, size guardrails and similar contract breaches.  The CLI maps
    this to exit code 3.
    """


class ParseError(WeylOpsError):
    """Expression or input-file syntax error.  CLI exit code 2."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
