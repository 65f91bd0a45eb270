"""Exception taxonomy shared by all comblab modules.

The CLI maps these onto exit codes: contract/parse problems exit 2,
resource-bound refusals exit 3.
"""


class ComblabError(Exception):
    """Base class for all comblab errors."""


class ArgumentError(ComblabError):
    """A call violated an operation's contract (bad shapes, unknown indices, ...)."""


class ParseError(ComblabError):
    """Malformed textual input; carries the offending position when known."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class ResourceError(ComblabError):
    """A requested computation exceeds a configured resource bound."""
