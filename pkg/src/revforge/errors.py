"""Exception types shared across the package."""


class RevforgeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RevforgeError):
    """Raised when formula text cannot be parsed.

    Carries the character position at which the problem was detected, so
    callers (notably the CLI) can point at the offending spot.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LanguageError(RevforgeError):
    """Raised for malformed languages or worlds outside the language."""


class PartitionError(RevforgeError):
    """Raised when blocks do not form an ordered partition of the worlds."""


class InconsistentInputError(RevforgeError):
    """Raised when an operation requires a consistent input and gets none.

    For set-based operations, ``culprits`` holds a minimal inconsistent
    subset of the offending members (as rendered text) for diagnostics.
    """

    def __init__(self, message: str, culprits: tuple = ()):
        if culprits:
            message = f"{message}; minimal inconsistent subset: {{{', '.join(culprits)}}}"
        super().__init__(message)
        self.culprits = culprits


class UnknownOperatorError(RevforgeError):
    """Raised when a registry lookup names no registered operator."""


class UnknownPostulateError(RevforgeError):
    """Raised when a check names no catalogued postulate."""


class UnsatisfiableConditionalsError(RevforgeError):
    """Raised when no total preorder satisfies a set of conditionals."""


class ScenarioError(RevforgeError):
    """Raised for malformed or unrunnable scenario files."""


class SpaceError(RevforgeError):
    """Raised for instance-space configurations outside supported bounds."""
