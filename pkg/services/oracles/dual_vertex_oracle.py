"""
Vertex enumeration of the unit ball of Lipschitz functions vanishing at the base.

Every vertex has n - 1 independent tight constraints |f(u) - f(v)| = d(u, v)
forming a spanning tree, so it is reached by growing a partial function from
the base one tight edge at a time. Partial functions that already break the
Lipschitz bound are dropped, and each partial function is expanded once.
"""
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, List, Optional, Set, Tuple

from core.configs import settings
from core.exceptions import ResourceLimitError
from schemas import FiniteMetricSpace, MoleculeSystem, PointMassElement
from services import molecule_system_service

VERTEX_CACHE_SIZE = 256

# sorted (point, value) items of a partial function
PartialState = Tuple[Tuple[int, Fraction], ...]


def _check_size(space: FiniteMetricSpace, max_points: Optional[int]) -> None:
    max_points = settings.ORACLE_MAX_POINTS if max_points is None else max_points
    if space.size > max_points:
        raise ResourceLimitError(
            f"Dual vertex enumeration supports at most {max_points} points, got {space.size}."
        )

def _extensions(dist: Tuple[Tuple[Fraction, ...], ...], state: PartialState) -> List[PartialState]:
    assigned = dict(state)
    grown = []
    for v in range(len(dist)):
        if v in assigned:
            continue
        row = dist[v]
        candidates = {value + sign * row[u] for u, value in state for sign in (1, -1)}
        for candidate in candidates:
            if all(abs(candidate - value) <= row[w] for w, value in state):
                grown.append(tuple(sorted(state + ((v, candidate),))))
    return grown

@lru_cache(maxsize=VERTEX_CACHE_SIZE)
def _vertices(dist: Tuple[Tuple[Fraction, ...], ...], base: int) -> FrozenSet[Tuple[Fraction, ...]]:
    size = len(dist)
    start: PartialState = ((base, Fraction(0)),)
    seen: Set[PartialState] = {start}
    stack = [start]
    vertices = set()
    while stack:
        state = stack.pop()
        if len(state) == size:
            vertices.add(tuple(value for _, value in state))
            continue
        for grown in _extensions(dist, state):
            if grown not in seen:
                seen.add(grown)
                stack.append(grown)
    return frozenset(vertices)

def enumerate_dual_vertices(
    space: FiniteMetricSpace,
    max_points: Optional[int] = None,
) -> FrozenSet[Tuple[Fraction, ...]]:
    """
    Function to list every vertex of {f : Lip(f) <= 1, f(base) = 0}.
    Results are cached per distance matrix and base point.
    :param space:
    :param max_points: defaults to settings.ORACLE_MAX_POINTS
    :return: distinct value vectors
    """
    _check_size(space, max_points)
    return _vertices(space.dist, space.base)

def brute_dual_norm(
    space: FiniteMetricSpace,
    element: PointMassElement,
    max_points: Optional[int] = None,
) -> Fraction:
    """
    Function to maximize sum_p c_p f(p) over all dual vertices
    :param space:
    :param element:
    :param max_points:
    :return:
    """
    return max(
        molecule_system_service.evaluate_element(element, vertex)
        for vertex in enumerate_dual_vertices(space, max_points)
    )

def brute_norming_uniqueness(
    space: FiniteMetricSpace,
    system: MoleculeSystem,
    max_points: Optional[int] = None,
) -> bool:
    """
    Function to check that exactly one dual vertex reaches sum(weights) on the
    system's element, i.e. the norming function exists and is unique
    :param space:
    :param system:
    :param max_points:
    :return:
    """
    element = molecule_system_service.to_point_masses(space, system)
    target = system.total_weight
    optimal = [
        vertex
        for vertex in enumerate_dual_vertices(space, max_points)
        if molecule_system_service.evaluate_element(element, vertex) == target
    ]
    return len(optimal) == 1
