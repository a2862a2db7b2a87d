# -*- coding: utf-8 -*-
"""
Exception hierarchy shared by the algebra, matrix, solver and I/O layers.
"""


class NeutroError(Exception):
    """Base class for every error raised by this package."""


class DomainError(NeutroError, ValueError):
    """An operation is undefined for its operands (e.g. division by an infinity)."""


class DimensionMismatch(NeutroError, ValueError):
    """Matrix shapes are incompatible, or an entry count disagrees with a header."""


class ParseError(NeutroError, ValueError):
    """
    Malformed text input.

    Parameters
    ----------
    message : human readable description
    offset  : 0-based character offset inside the literal, if known
    line    : 1-based line number inside a file, if known
    column  : 1-based column number inside a file, if known
    """

    def __init__(self, message, offset=None, line=None, column=None):
        self.message = message
        self.offset = offset
        self.line = line
        self.column = column
        super().__init__(self._render())

    def _render(self):
        if self.line is not None:
            where = f"line {self.line}"
            if self.column is not None:
                where += f", column {self.column}"
            return f"{where}: {self.message}"
        if self.offset is not None:
            return f"offset {self.offset}: {self.message}"
        return self.message
