from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence

from core.configs import settings
from core.exceptions import ResourceLimitError
from schemas import CycleOracleResult


def _check_size(size: int, max_size: Optional[int]) -> None:
    max_size = settings.ORACLE_MAX_CYCLE_SIZE if max_size is None else max_size
    if size > max_size:
        raise ResourceLimitError(f"Cycle enumeration supports at most {max_size} indices, got {size}.")

def brute_cycles(
    beta: Sequence[Sequence[Fraction]],
    max_len: Optional[int] = None,
    max_size: Optional[int] = None,
) -> CycleOracleResult:
    """
    Function to enumerate every simple cycle, smallest index first, and keep the
    first one with minimal beta-sum
    :param beta:
    :param max_len: longest cycle considered, defaults to the matrix size
    :param max_size: defaults to settings.ORACLE_MAX_CYCLE_SIZE
    :return:
    """
    size = len(beta)
    _check_size(size, max_size)
    max_len = size if max_len is None else min(max_len, size)
    best_sum: Optional[Fraction] = None
    best_cycle = None
    for lead in range(size):
        for length in range(1, max_len + 1):
            for rest in permutations(range(lead + 1, size), length - 1):
                cycle = (lead,) + rest
                total = sum(
                    (beta[cycle[r]][cycle[(r + 1) % length]] for r in range(length)),
                    Fraction(0),
                )
                if best_sum is None or total < best_sum:
                    best_sum, best_cycle = total, cycle
    if best_sum is None:
        return CycleOracleResult(min_sum=Fraction(0))
    return CycleOracleResult(min_sum=best_sum, cycle=best_cycle)

def brute_path_minimum(
    beta: Sequence[Sequence[Fraction]],
    start: int,
    end: int,
    max_size: Optional[int] = None,
) -> Fraction:
    """
    Function to get the minimal beta-sum over simple paths start -> end
    :param beta:
    :param start:
    :param end:
    :param max_size:
    :return: 0 when start == end
    """
    size = len(beta)
    _check_size(size, max_size)
    if start == end:
        return Fraction(0)
    inner = [index for index in range(size) if index not in (start, end)]
    best = beta[start][end]
    for length in range(1, len(inner) + 1):
        for middle in permutations(inner, length):
            path = (start,) + middle + (end,)
            total = sum((beta[path[r]][path[r + 1]] for r in range(len(path) - 1)), Fraction(0))
            if total < best:
                best = total
    return best
