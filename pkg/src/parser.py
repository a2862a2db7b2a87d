# -*- coding: utf-8 -*-
"""
Parsers for neutrosophic literals, matrix files and graph files.

Literal grammar (no whitespace inside a literal):

    nn     := sign? term (sign term)?
    term   := number 'I'? | 'I'
    number := 'inf' | digits ('.' digits)?
    sign   := '+' | '-'

A term ending in 'I' gives the coefficient b (bare 'I' means 1), any other
term gives a. At most one term of each kind.
"""

import logging
import os

from config import COMMENT_PREFIX
from src.algebra import NeutrosophicNumber
from src.errors import DimensionMismatch, ParseError
from src.matrix import NeutroMatrix
from src.solver import Edge, WeightedDigraph

logger = logging.getLogger(__name__)


class _LiteralScanner:
    """Recursive-descent reader over one literal."""

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def error(self, message):
        return ParseError(message, offset=self.pos)

    def sign(self):
        ch = self.peek()
        if ch in ('+', '-'):
            self.pos += 1
            return -1.0 if ch == '-' else 1.0
        return None

    def digits(self):
        start = self.pos
        while self.peek().isdigit() and self.peek().isascii():
            self.pos += 1
        return self.text[start:self.pos]

    def number(self):
        if self.text.startswith('inf', self.pos):
            self.pos += 3
            return float('inf')
        start = self.pos
        whole = self.digits()
        if not whole:
            return None
        if self.peek() == '.':
            self.pos += 1
            frac = self.digits()
            if not frac:
                raise self.error("expected digits after '.'")
            return self.finite(f"{whole}.{frac}", start)
        return self.finite(whole, start)

    def finite(self, digits, start):
        value = float(digits)
        if value == float('inf'):
            self.pos = start
            raise self.error("number overflows to infinity, write 'inf' instead")
        return value

    def term(self):
        """Returns (value, is_indeterminate)."""
        start = self.pos
        value = self.number()
        if self.peek() == 'I':
            self.pos += 1
            return (1.0 if value is None else value), True
        if value is None:
            self.pos = start
            raise self.error("expected a number, 'inf' or 'I'")
        return value, False

    def literal(self):
        if not self.text:
            raise self.error("empty literal")
        a = b = None
        leading = self.sign()
        sign = 1.0 if leading is None else leading
        while True:
            value, is_i = self.term()
            if is_i:
                if b is not None:
                    raise self.error("more than one I-term")
                b = sign * value
            else:
                if a is not None:
                    raise self.error("more than one determinate term")
                a = sign * value
            if self.pos == len(self.text):
                break
            sign = self.sign()
            if sign is None:
                raise self.error(f"unexpected character {self.peek()!r}")
            if self.pos == len(self.text):
                raise self.error("expected a term after sign")
        return NeutrosophicNumber(0.0 if a is None else a, 0.0 if b is None else b)


def parse_nn(text):
    """
    Parse a neutrosophic literal such as "-8+I", "5-I", "2I", "inf".

    Raises ParseError carrying the offending character offset.
    """
    return _LiteralScanner(text).literal()


def _data_lines(text):
    """Yield (line_number, raw_line) for non-blank, non-comment lines."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIX):
            continue
        yield number, raw


def _tokens(line):
    """Yield (column, token) pairs; columns are 1-based."""
    pos = 0
    for token in line.split():
        pos = line.index(token, pos)
        yield pos + 1, token
        pos += len(token)


def _parse_token(token, line, column):
    try:
        return parse_nn(token)
    except ParseError as exc:
        raise ParseError(exc.message, line=line, column=column + exc.offset) from None


def _decimal_value(token):
    """Value of an ASCII decimal token, None for anything else."""
    if not (token.isascii() and token.isdecimal()):
        return None
    try:
        return int(token)
    except ValueError:
        # longer than the interpreter's int conversion limit
        return None


def _parse_positive_int(token, line, column, what):
    value = _decimal_value(token)
    if value is None or value < 1:
        raise ParseError(f"{what} must be a positive integer, got {token!r}", line=line, column=column)
    return value


def _read_text(source):
    try:
        if hasattr(source, 'read'):
            return source.read()
        with open(os.fspath(source), 'r', encoding='utf-8') as f:
            return f.read()
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8 ({exc.reason})", offset=exc.start) from None


def parse_matrix(text):
    """Parse MatrixFile text: "<rows> <cols>" then rows*cols literals, row-major."""
    lines = _data_lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError("missing '<rows> <cols>' header", line=1, column=1)
    number, raw = header
    fields = list(_tokens(raw))
    if len(fields) != 2:
        raise ParseError("header must be '<rows> <cols>'", line=number, column=1)
    rows = _parse_positive_int(fields[0][1], number, fields[0][0], "row count")
    cols = _parse_positive_int(fields[1][1], number, fields[1][0], "column count")

    entries = []
    for number, raw in lines:
        for column, token in _tokens(raw):
            entries.append(_parse_token(token, number, column))

    if len(entries) != rows * cols:
        raise DimensionMismatch(
            f"header declares {rows}x{cols} = {rows * cols} entries, found {len(entries)}"
        )
    return NeutroMatrix.from_entries(rows, cols, entries)


def read_matrix(source):
    """Read a MatrixFile from a path or an open text stream."""
    matrix = parse_matrix(_read_text(source))
    logger.debug("read %dx%d matrix", matrix.rows, matrix.cols)
    return matrix


def parse_graph(text):
    """
    Parse GraphFile text: "<node_count>" then one "<from> <to> <literal>" per line.

    Returns a WeightedDigraph. Out-of-range indices and repeated (from, to)
    pairs are rejected with the offending line.
    """
    lines = _data_lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError("missing '<node_count>' header", line=1, column=1)
    number, raw = header
    fields = list(_tokens(raw))
    if len(fields) != 1:
        raise ParseError("header must be '<node_count>'", line=number, column=1)
    node_count = _parse_positive_int(fields[0][1], number, fields[0][0], "node count")

    edges = []
    seen = set()
    for number, raw in lines:
        fields = list(_tokens(raw))
        if len(fields) != 3:
            raise ParseError("edge line must be '<from> <to> <literal>'", line=number, column=1)
        ends = []
        for column, token in fields[:2]:
            index = _decimal_value(token)
            if index is None or index >= node_count:
                raise ParseError(
                    f"node index {token!r} outside [0, {node_count})", line=number, column=column
                )
            ends.append(index)
        source, target = ends
        if (source, target) in seen:
            raise ParseError(f"duplicate edge {source} -> {target}", line=number, column=1)
        seen.add((source, target))
        weight = _parse_token(fields[2][1], number, fields[2][0])
        edges.append(Edge(source, target, weight))

    return WeightedDigraph(node_count, tuple(edges))


def read_graph(source):
    """Read a GraphFile from a path or an open text stream."""
    graph = parse_graph(_read_text(source))
    logger.debug("read graph with %d nodes, %d edges", graph.node_count, len(graph.edges))
    return graph
