from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Tuple

from constants import general as general_constants
from constants.services import metric_core as metric_constants
from core.configs import settings
from core.exceptions import InvalidArgumentError, ParseError
from core.logger import logger
from core.utilities import new_request_id, parse_rational
from schemas import FiniteMetricSpace, ValidationReport, Violation


def _parse_matrix(labels: Sequence[str], dist: Sequence[Sequence[object]]) -> List[List[Fraction]]:
    size = len(labels)
    if len(dist) != size or any(len(row) != size for row in dist):
        raise ParseError(general_constants.DETAIL_MATRIX_NOT_SQUARE)
    return [[parse_rational(entry) for entry in row] for row in dist]

def validate_space(
    labels: Sequence[str],
    dist: Sequence[Sequence[object]],
    base_label: str,
    limit: Optional[int] = None,
) -> ValidationReport:
    """
    Function to check every metric axiom of a labelled distance matrix.
    Violations are collected in lexicographic index order up to `limit`.
    :param labels:
    :param dist: square matrix of integers, Fractions or "p/q" strings
    :param base_label:
    :param limit: defaults to settings.VIOLATION_REPORT_LIMIT
    :return:
    """
    limit = settings.VIOLATION_REPORT_LIMIT if limit is None else limit
    matrix = _parse_matrix(labels, dist)
    if base_label not in labels:
        raise ParseError(f"{general_constants.DETAIL_BASE_LABEL_UNKNOWN} Got: {base_label!r}")

    size = len(labels)
    violations: List[Violation] = []
    truncated = False

    def record(kind: str, *indices: int) -> bool:
        nonlocal truncated
        if len(violations) >= limit:
            truncated = True
            return False
        violations.append(Violation(kind=kind, indices=indices))
        return True

    seen = {}
    for index, label in enumerate(labels):
        if label in seen:
            if not record(metric_constants.VIOLATION_DUPLICATE_LABEL, seen[label], index):
                break
        else:
            seen[label] = index

    for i in range(size):
        if truncated:
            break
        if matrix[i][i] != 0:
            if not record(metric_constants.VIOLATION_NONZERO_DIAGONAL, i, i):
                break
        for j in range(size):
            if i == j:
                continue
            value = matrix[i][j]
            if value < 0:
                if not record(metric_constants.VIOLATION_NEGATIVE, i, j):
                    break
            elif value == 0:
                if not record(metric_constants.VIOLATION_ZERO_OFFDIAG, i, j):
                    break
            if i < j and value != matrix[j][i]:
                if not record(metric_constants.VIOLATION_ASYMMETRY, i, j):
                    break

    for i in range(size):
        if truncated:
            break
        for j in range(size):
            if truncated:
                break
            for k in range(size):
                if matrix[i][k] > matrix[i][j] + matrix[j][k]:
                    if not record(metric_constants.VIOLATION_TRIANGLE, i, j, k):
                        break

    off_diagonal = [matrix[i][j] for i in range(size) for j in range(size) if i != j]
    positive = [value for value in off_diagonal if value > 0]
    diameter = max(off_diagonal, default=Fraction(0))
    theta = min(positive) if positive else None
    ok = not violations and not truncated
    if not ok:
        logger.info(f"validate_space: {len(violations)} violation(s), truncated={truncated}")
    return ValidationReport(
        ok=ok,
        violations=tuple(violations),
        truncated=truncated,
        theta=theta,
        diameter=max(diameter, Fraction(0)),
    )

def build_space(
    labels: Sequence[str],
    dist: Sequence[Sequence[object]],
    base_label: str,
) -> FiniteMetricSpace:
    """
    Function to validate raw data and construct the space from it
    :param labels:
    :param dist:
    :param base_label:
    :return:
    """
    report = validate_space(labels, dist, base_label)
    if not report.ok:
        req_id = new_request_id()
        logger.error(f"build_space: {req_id} rejected matrix with {len(report.violations)} violation(s)")
        raise InvalidArgumentError(
            f"{general_constants.DETAIL_SPACE_INVALID} ({req_id})",
            context=report,
        )
    return FiniteMetricSpace(
        labels=tuple(labels),
        base=list(labels).index(base_label),
        dist=tuple(tuple(row) for row in _parse_matrix(labels, dist)),
    )

def _check_index(space: FiniteMetricSpace, *indices: int) -> None:
    for index in indices:
        if not 0 <= index < space.size:
            raise InvalidArgumentError(f"{general_constants.DETAIL_INDEX_OUT_OF_RANGE} Got: {index}")

def _check_endpoints(space: FiniteMetricSpace, s: int, t: int) -> None:
    _check_index(space, s, t)
    if s == t:
        raise InvalidArgumentError(general_constants.DETAIL_EQUAL_ENDPOINTS)

def _check_eps(eps: Fraction) -> None:
    if eps <= 0:
        raise InvalidArgumentError(general_constants.DETAIL_EPS_NOT_POSITIVE)

def segment_excess(space: FiniteMetricSpace, s: int, t: int, z: int) -> Fraction:
    """
    d(s,z) + d(t,z) - d(s,t); never negative on a valid space
    """
    dist = space.dist
    return dist[s][z] + dist[t][z] - dist[s][t]

def segment(space: FiniteMetricSpace, s: int, t: int) -> FrozenSet[int]:
    """
    Function to compute the metric segment [s,t] = {z : d(s,z) + d(t,z) = d(s,t)}
    :param space:
    :param s:
    :param t:
    :return:
    """
    _check_endpoints(space, s, t)
    return frozenset(z for z in range(space.size) if segment_excess(space, s, t, z) == 0)

def segment_eps(space: FiniteMetricSpace, s: int, t: int, eps: Fraction) -> FrozenSet[int]:
    """
    Function to compute [s,t]_eps = {z : d(s,z) + d(t,z) < d(s,t) + eps}, strict
    :param space:
    :param s:
    :param t:
    :param eps: positive rational
    :return:
    """
    _check_endpoints(space, s, t)
    _check_eps(eps)
    return frozenset(z for z in range(space.size) if segment_excess(space, s, t, z) < eps)

def minimal_excess(space: FiniteMetricSpace, s: int, t: int) -> Optional[Fraction]:
    """
    Function to find the smallest positive excess over points outside [s,t].
    segment_eps(s, t, eps) equals segment(s, t) exactly when eps is at most this value.
    :param space:
    :param s:
    :param t:
    :return: None when [s,t] is the whole space
    """
    _check_endpoints(space, s, t)
    excesses = [segment_excess(space, s, t, z) for z in range(space.size)]
    return min((excess for excess in excesses if excess > 0), default=None)

def separation(space: FiniteMetricSpace) -> Tuple[Fraction, Fraction]:
    """
    Function to get (theta, diameter): the minimal and maximal off-diagonal distance
    :param space: a space with at least two points
    :return:
    """
    if space.size < 2:
        raise InvalidArgumentError(general_constants.DETAIL_SPACE_TOO_SMALL)
    off_diagonal = [
        space.dist[i][j] for i in range(space.size) for j in range(space.size) if i != j
    ]
    return min(off_diagonal), max(off_diagonal)
