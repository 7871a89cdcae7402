"""
Capacity and Function File Formats
==================================

Reading and writing the version-tagged text formats:

    capacity v1              function v1
    n <int>                  n <int>
    <mask> <rational>        <index> <rational>
    ...  (2^n lines)         ...  (n lines)

Rationals are ``p/q`` or a bare integer. Lines starting with ``#`` are
comments. Keys must appear in increasing order without gaps.
"""

import logging
import re
from fractions import Fraction
from typing import List, Tuple

from engine.capacity import MAX_GROUND_SET, Capacity, build_capacity
from engine.choquet import PointFunction
from utils.error_handler import FormatError, ValidationError

logger = logging.getLogger(__name__)

CAPACITY_HEADER = "capacity v1"
FUNCTION_HEADER = "function v1"

_RATIONAL = re.compile(r"^-?[0-9]+(/[0-9]+)?$")
_INTEGER = re.compile(r"^[0-9]+$")


def format_rational(value: Fraction) -> str:
    """Reduced ``p/q`` with q >= 1, integers without ``/1``"""
    return str(Fraction(value))


def parse_rational(token: str, filename: str = "<string>", line: int = None) -> Fraction:
    if not _RATIONAL.match(token):
        raise FormatError(filename, line, f"not a rational: {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise FormatError(filename, line, f"zero denominator in {token!r}")


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((number, stripped))
    return lines


def _parse_table(text: str, header: str, filename: str, size_of) -> Tuple[int, List[Fraction]]:
    """Shared reader: header, ``n`` line, then consecutive key/value lines"""
    lines = _content_lines(text)
    if not lines:
        raise FormatError(filename, None, "file is empty")

    number, first = lines[0]
    if first != header:
        raise FormatError(filename, number, f"expected header {header!r}, got {first!r}")

    if len(lines) < 2:
        raise FormatError(filename, number, "missing 'n <integer>' line")
    number, second = lines[1]
    parts = second.split()
    if len(parts) != 2 or parts[0] != "n" or not _INTEGER.match(parts[1]):
        raise FormatError(filename, number, f"expected 'n <integer>', got {second!r}")
    n = int(parts[1])
    if not 1 <= n <= MAX_GROUND_SET:
        raise FormatError(filename, number, f"n must lie in 1..{MAX_GROUND_SET}, got {n}")

    size = size_of(n)
    values: List[Fraction] = []
    for number, entry in lines[2:]:
        parts = entry.split()
        if len(parts) != 2 or not _INTEGER.match(parts[0]):
            raise FormatError(filename, number, f"expected '<key> <rational>', got {entry!r}")
        key = int(parts[0])
        expected = len(values)
        if key < expected:
            raise FormatError(filename, number, f"duplicate key {key}")
        if key >= size:
            raise FormatError(filename, number, f"key {key} out of range (expected < {size})")
        if key > expected:
            raise FormatError(filename, number, f"missing key {expected}")
        values.append(parse_rational(parts[1], filename, number))

    if len(values) < size:
        last_line = lines[-1][0]
        raise FormatError(filename, last_line, f"missing key {len(values)}")
    return n, values


def parse_capacity_text(text: str, filename: str = "<string>") -> Capacity:
    n, values = _parse_table(text, CAPACITY_HEADER, filename, lambda n: 1 << n)
    try:
        return build_capacity(n, values)
    except ValidationError as e:
        raise FormatError(filename, None, e.message)


def serialize_capacity(c: Capacity) -> str:
    lines = [CAPACITY_HEADER, f"n {c.n}"]
    lines.extend(f"{mask} {format_rational(v)}" for mask, v in enumerate(c.values))
    return "\n".join(lines) + "\n"


def parse_function_text(text: str, filename: str = "<string>") -> PointFunction:
    _, values = _parse_table(text, FUNCTION_HEADER, filename, lambda n: n)
    return PointFunction(tuple(values))


def serialize_function(X) -> str:
    lines = [FUNCTION_HEADER, f"n {len(X)}"]
    lines.extend(f"{i} {format_rational(v)}" for i, v in enumerate(X.values))
    return "\n".join(lines) + "\n"


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        logger.error(f"Cannot read {path}: {e}")
        raise FormatError(path, None, f"cannot read file: {e.strerror or e}")


def read_capacity_file(path: str) -> Capacity:
    return parse_capacity_text(_read_text(path), filename=path)


def read_function_file(path: str) -> PointFunction:
    return parse_function_text(_read_text(path), filename=path)


def write_text_file(path: str, text: str) -> None:
    # newline="" keeps the bytes identical across platforms
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


__all__ = [
    "CAPACITY_HEADER",
    "FUNCTION_HEADER",
    "format_rational",
    "parse_rational",
    "parse_capacity_text",
    "serialize_capacity",
    "parse_function_text",
    "serialize_function",
    "read_capacity_file",
    "read_function_file",
    "write_text_file",
]
