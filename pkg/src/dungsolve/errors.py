"""Exception hierarchy shared by the framework builder, parsers and CLI."""

from __future__ import annotations

__all__ = [
    "ArgumentationError", "FrameworkError", "DuplicateArgument", "UnknownArgumentInAttack",
    "EmptyName", "InvalidName", "UnknownArgument", "ParseError", "MissingSeparator",
    "MalformedAttackLine", "MalformedArgumentLine", "ApxSyntaxError", "TooLarge",
]


class ArgumentationError(ValueError):
    """Base class for every error raised by dungsolve."""


class FrameworkError(ArgumentationError):
    """Invalid argument declarations or attacks.

    ``line`` is filled in when the error originates from a parsed file.
    """

    def __init__(self, message: str, name: str | None = None, line: int | None = None):
        self.name = name
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateArgument(FrameworkError):
    pass


class UnknownArgumentInAttack(FrameworkError):
    pass


class EmptyName(FrameworkError):
    pass


class InvalidName(FrameworkError):
    pass


class UnknownArgument(ArgumentationError):
    """A query names an argument that is not part of the framework."""


class ParseError(ArgumentationError):
    """Malformed input file. Carries a 1-based line and, for apx, a character offset."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)


class MissingSeparator(ParseError):
    pass


class MalformedAttackLine(ParseError):
    pass


class MalformedArgumentLine(ParseError):
    pass


class ApxSyntaxError(ParseError):
    pass


class TooLarge(ArgumentationError):
    """Framework exceeds the brute-force oracle's size cap."""

    def __init__(self, argument_count: int, limit: int):
        self.argument_count = argument_count
        self.limit = limit
        super().__init__(f"{argument_count} arguments exceeds oracle limit of {limit}")
