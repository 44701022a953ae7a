"""Exception types shared across the package.

All of these derive from ValueError so that casual callers can catch one
thing; the distinct classes exist because the CLI maps them to exit codes
and because tests pin down which failure mode occurred.
"""


class ParameterDomainError(ValueError):
    """A named graph family was requested with out-of-range parameters."""


class SizeGuardError(ValueError):
    """An enumeration was requested above the configured size guard."""


class Graph6ParseError(ValueError):
    """Malformed graph6 input. `offset` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph6FormatError(ValueError):
    """Input is a related format (sparse6/digraph6) this package does not read."""


class Graph6RangeError(ValueError):
    """Graph order outside what the graph6 encoding supports."""


class ValuationError(ValueError):
    """p-adic valuation requested for 0, where it is undefined."""


class InternalInconsistencyError(AssertionError):
    """A cross-check between two supposedly-equal computation paths failed.

    Raised only when an invariant the implementation relies on is violated;
    seeing this means a bug, not bad user input.
    """
