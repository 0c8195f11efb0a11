"""Exception types shared across the package."""


class FtsError(ValueError):
    """Base class for all errors raised by this package."""


class DegreeError(FtsError):
    """Bad truth degree: out of [0, 1], too many fractional digits, or unparseable."""


class ModelError(FtsError):
    """Structurally invalid system, relation, or state map."""


class UniverseError(FtsError):
    """A state lies outside the universe an operation expects."""


class AlphabetError(FtsError):
    """Label sets of the operands disagree."""


class CapError(FtsError):
    """A brute-force oracle was asked to exceed its size cap."""


class ParseError(FtsError):
    """Text input rejected; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
