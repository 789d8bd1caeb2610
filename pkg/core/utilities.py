from fractions import Fraction
import re
from typing import Any, List, Sequence, Tuple, Union
from uuid import uuid4

from constants import general as general_constants
from core.exceptions import InternalConsistencyError, ParseError

RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def new_request_id() -> str:
    """
    Function to create a request id to correlate log lines with error reports
    :return:
    """
    return str(uuid4()).replace("-", "")

def parse_rational(value: Any) -> Fraction:
    """
    Parse an exact rational from an int, a Fraction or a "p"/"p/q" string.
    Floats and booleans are rejected: verdicts depend on exact equalities.

    :param value: The literal to parse.
    :return: The parsed Fraction.
    """
    if isinstance(value, bool):
        raise ParseError(f"{general_constants.DETAIL_NOT_RATIONAL} Got: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        matched = RATIONAL_PATTERN.match(value)
        if matched:
            numerator, denominator = matched.group(1), matched.group(2)
            if denominator is not None and int(denominator) == 0:
                raise ParseError(f"Zero denominator in {value!r}.")
            return Fraction(int(numerator), int(denominator) if denominator else 1)
    raise ParseError(f"{general_constants.DETAIL_NOT_RATIONAL} Got: {value!r}")

def render_rational(value: Fraction) -> Union[int, str]:
    """
    Render a rational canonically: a bare integer when the denominator is 1,
    otherwise "p/q" in lowest terms with q > 0.

    :param value:
    :return:
    """
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"

def shortest_path_closure(
    weights: Sequence[Sequence[Fraction]],
) -> Tuple[List[List[Fraction]], List[List[int]]]:
    """
    All-pairs shortest paths over a complete weighted digraph (Floyd-Warshall).
    Improvements are taken only when strictly smaller, so ties keep the
    earliest path found.

    :param weights: Square matrix, weights[i][j] is the arc weight i -> j.
    :return: The closure matrix and the successor matrix (next hop on a minimizing path).
    """
    size = len(weights)
    closure = [list(row) for row in weights]
    successor = [list(range(size)) for _ in range(size)]
    for via in range(size):
        row_via = closure[via]
        for i in range(size):
            to_via = closure[i][via]
            row_i = closure[i]
            successor_i = successor[i]
            for j in range(size):
                candidate = to_via + row_via[j]
                if candidate < row_i[j]:
                    row_i[j] = candidate
                    successor_i[j] = successor_i[via]
    return closure, successor

def reconstruct_path(successor: Sequence[Sequence[int]], start: int, end: int) -> List[int]:
    """
    Function to walk the successor matrix from start to end
    :param successor:
    :param start:
    :param end:
    :return: the visited indices, start and end included
    """
    path = [start]
    current = start
    while current != end:
        current = successor[current][end]
        path.append(current)
        if len(path) > len(successor) + 1:
            raise InternalConsistencyError(
                f"reconstruct_path: successor walk {start}->{end} does not terminate."
            )
    return path
