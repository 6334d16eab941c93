"""Read and write matrices in the grothmat v1 text format.

::

    grothmat v1
    kind: sym|rect
    field: real|complex
    size: n            (or "size: m n" for rect)
    <entries row-major, whitespace separated; complex as a+bi / a-bi>

Blank lines and text after ``#`` are ignored.
"""
import logging
from typing import Union

import numpy as np

from grothnorm.classes import SymMatrix, RectMatrix, SYMMETRY_TOL
from grothnorm.utils import FieldTag, GrothmatParseError, SymmetryError

__all__ = ["read_matrix", "write_matrix", "parse_matrix", "format_matrix", "MAGIC"]

logger = logging.getLogger(__name__)

MAGIC = "grothmat v1"
KINDS = ("sym", "rect")


def _tokens(lines):
    for lineno, line in enumerate(lines, start=1):
        for token in line.split("#", 1)[0].split():
            yield lineno, token


def _header_value(lines_iter, key):
    for lineno, line in lines_iter:
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        name, sep, value = text.partition(":")
        if not sep or name.strip().lower() != key:
            raise GrothmatParseError(f"expected '{key}: ...', found {text!r}", lineno)
        return lineno, value.strip()
    raise GrothmatParseError(f"missing '{key}' header")


def _scalar(token: str, field: FieldTag, lineno: int):
    try:
        if field is FieldTag.REAL:
            return float(token)
        if token.endswith("i"):
            token = token[:-1] + "j"
            if token in ("j", "+j", "-j"):
                token = token.replace("j", "1j")
        return complex(token)
    except ValueError:
        raise GrothmatParseError(f"cannot read {token!r} as a {field.value} number", lineno) from None


def parse_matrix(text: str) -> Union[SymMatrix, RectMatrix]:
    """Parse the content of a grothmat v1 file.

    Returns
    -------
    matrix : SymMatrix | RectMatrix
    """
    lines = text.splitlines()
    numbered = iter(enumerate(lines, start=1))

    for lineno, line in numbered:
        text_line = line.split("#", 1)[0].strip()
        if not text_line:
            continue
        if text_line.lower() != MAGIC:
            raise GrothmatParseError(f"expected {MAGIC!r}, found {text_line!r}", lineno)
        break
    else:
        raise GrothmatParseError("empty file")

    lineno, kind = _header_value(numbered, "kind")
    if kind not in KINDS:
        raise GrothmatParseError(f"unknown kind {kind!r}", lineno)
    lineno, field_name = _header_value(numbered, "field")
    try:
        field = FieldTag(field_name)
    except ValueError:
        raise GrothmatParseError(f"unknown field {field_name!r}", lineno) from None
    lineno, size = _header_value(numbered, "size")
    try:
        dims = tuple(int(s) for s in size.split())
    except ValueError:
        raise GrothmatParseError(f"bad size {size!r}", lineno) from None
    if kind == "sym":
        if len(dims) != 1:
            raise GrothmatParseError("a symmetric matrix takes a single size", lineno)
        dims = (dims[0], dims[0])
    elif len(dims) != 2:
        raise GrothmatParseError("a rectangular matrix takes two sizes", lineno)
    if min(dims) < 1:
        raise GrothmatParseError("sizes must be positive", lineno)

    header_end = lineno
    values, last_line = [], header_end
    for token_line, token in _tokens(lines[header_end:]):
        last_line = header_end + token_line
        values.append(_scalar(token, field, last_line))

    expected = dims[0] * dims[1]
    if len(values) != expected:
        raise GrothmatParseError(f"expected {expected} entries, found {len(values)}", last_line)

    entries = np.array(values, dtype=field.dtype).reshape(dims)
    if kind == "rect":
        return RectMatrix(entries, field)

    if np.any(np.diag(entries).imag != 0):
        raise SymmetryError("non-real diagonal entry in a Hermitian matrix")
    scale = max(1.0, float(np.max(np.abs(entries))))
    violation = float(np.max(np.abs(entries - entries.conj().T)))
    if violation > SYMMETRY_TOL * scale:
        i, j = np.unravel_index(np.argmax(np.abs(entries - entries.conj().T)), dims)
        raise SymmetryError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not conjugate "
                            f"(difference {violation:.3e})")
    return SymMatrix(entries, field)


def read_matrix(path) -> Union[SymMatrix, RectMatrix]:
    """Read a grothmat v1 file.

    Parameters
    ----------
    path : str | os.PathLike

    Returns
    -------
    matrix : SymMatrix | RectMatrix
        symmetric files give an exactly Hermitian matrix, rectangular files the raw entries
    """
    with open(path) as f:
        matrix = parse_matrix(f.read())
    logger.debug("read %r from %s", matrix, path)
    return matrix


def _format_scalar(x, field):
    if field is FieldTag.REAL:
        return f"{float(np.real(x)):.17g}"
    return f"{x.real:.17g}{x.imag:+.17g}i"


def format_matrix(matrix: Union[SymMatrix, RectMatrix]) -> str:
    """grothmat v1 text with 17 significant digits per entry."""
    if isinstance(matrix, SymMatrix):
        kind, size = "sym", f"{matrix.n}"
    elif isinstance(matrix, RectMatrix):
        kind, size = "rect", f"{matrix.m} {matrix.n}"
    else:
        raise TypeError(f"Cannot write an object of type {type(matrix).__name__}.")

    rows = [" ".join(_format_scalar(x, matrix.field) for x in row) for row in matrix.entries]
    return "\n".join([MAGIC, f"kind: {kind}", f"field: {matrix.field.value}", f"size: {size}", *rows]) + "\n"


def write_matrix(path, matrix: Union[SymMatrix, RectMatrix]):
    with open(path, "w") as f:
        f.write(format_matrix(matrix))
