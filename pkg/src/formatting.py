# -*- coding: utf-8 -*-
"""
Canonical text output for neutrosophic numbers, matrices and schedule traces.

Canonical literal form:
- the I-term is omitted when b = 0
- coefficients 1 / -1 are written "I" / "-I"
- when a = 0 and b != 0 only the I-term is written ("2I", "-I")
- infinities are "inf" / "-inf"; integers carry no decimal point
"""

import logging
import math

import numpy as np

logger = logging.getLogger(__name__)


def _format_component(value):
    if value == math.inf:
        return "inf"
    if value == -math.inf:
        return "-inf"
    if value == 0:
        return "0"
    return np.format_float_positional(value, unique=True, trim='-')


def _format_i_term(b):
    if b == 1:
        return "I"
    if b == -1:
        return "-I"
    return _format_component(b) + "I"


def format_nn(x):
    """Render x in canonical literal form, e.g. "-8+I", "5-I", "inf+infI"."""
    if x.b == 0:
        return _format_component(x.a)
    i_term = _format_i_term(x.b)
    if x.a == 0:
        return i_term
    sign = "+" if x.b > 0 else ""
    return _format_component(x.a) + sign + i_term


def format_matrix(M):
    """MatrixFile text: header line "<rows> <cols>", then one line per row."""
    lines = [f"{M.rows} {M.cols}"]
    for row in M.to_rows():
        lines.append(" ".join(format_nn(x) for x in row))
    return "\n".join(lines) + "\n"


# write_matrix is the name the text-format contract uses
write_matrix = format_matrix


def format_trace(trace):
    """Each state vector x(t) as a MatrixFile block headed by a "# x(t)" comment."""
    blocks = [f"# x({t})\n" + format_matrix(state) for t, state in enumerate(trace)]
    return "".join(blocks)


def save_matrix(M, filename):
    """
    Save a matrix to a MatrixFile.

    Parameters
    ----------
    M        : NeutroMatrix
    filename : output file path
    """
    with open(filename, 'w', encoding='utf-8') as f:
        f.write(format_matrix(M))

    logger.info("✓ Matrix saved to %s", filename)
