"""Shared exception types for the text parsers."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed text input; ``position`` is the 0-based offset of the offending character."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
