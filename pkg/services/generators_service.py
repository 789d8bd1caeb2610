from fractions import Fraction
from typing import Dict, List, Optional

import networkx as nx
import numpy as np

from constants import general as general_constants
from constants.services import generators as generator_constants
from core.configs import settings
from core.exceptions import InvalidArgumentError
from core.logger import logger
from core.utilities import shortest_path_closure
from schemas import (
    FiniteMetricSpace,
    GeneratorSpec,
    LipschitzFunction,
    MoleculeSystem,
    PointMassElement,
)
from services import metric_core_service, molecule_system_service, norming_builder_service


def _space(labels: List[str], dist: List[List[Fraction]]) -> FiniteMetricSpace:
    return FiniteMetricSpace(
        labels=tuple(labels),
        base=labels.index(generator_constants.BASE_LABEL),
        dist=tuple(tuple(row) for row in dist),
    )

def gen_star(k: int) -> FiniteMetricSpace:
    """
    Function to build {0, 1, ..., k} with d(n, 0) = 1 and d(m, n) = 2
    :param k: at least 1
    :return:
    """
    if k < 1:
        raise InvalidArgumentError(f"gen_star needs k >= 1, got {k}.")
    size = k + 1
    dist = [
        [Fraction(0) if i == j else Fraction(1) if 0 in (i, j) else Fraction(2) for j in range(size)]
        for i in range(size)
    ]
    return _space([str(i) for i in range(size)], dist)

def c0_distance(m: int, n: int) -> Fraction:
    """
    Sup-norm distance between x_m and x_n, with x_0 = 0, x_1 = 2e_1 and
    x_n = e_1 + (1 + 2^-n) e_n for n >= 2
    """
    if m == n:
        return Fraction(0)
    low, high = min(m, n), max(m, n)
    if low == 0:
        return Fraction(2) if high == 1 else 1 + Fraction(1, 2 ** high)
    if low == 1:
        return 1 + Fraction(1, 2 ** high)
    return 1 + Fraction(1, 2 ** low)

def gen_c0_truncation(k: int) -> FiniteMetricSpace:
    """
    Function to build {0, x1, ..., xk} inside c0 with the sup-norm distances
    :param k: at least 2
    :return:
    """
    if k < 2:
        raise InvalidArgumentError(f"gen_c0_truncation needs k >= 2, got {k}.")
    labels = [generator_constants.BASE_LABEL] + [
        f"{generator_constants.C0_POINT_PREFIX}{n}" for n in range(1, k + 1)
    ]
    dist = [[c0_distance(m, n) for n in range(k + 1)] for m in range(k + 1)]
    return _space(labels, dist)

def gen_line(k: int) -> FiniteMetricSpace:
    """Points 0, 1, ..., k-1 of the real line."""
    if k < 1:
        raise InvalidArgumentError(f"gen_line needs k >= 1, got {k}.")
    dist = [[Fraction(abs(i - j)) for j in range(k)] for i in range(k)]
    return _space([str(i) for i in range(k)], dist)

def _random_rational(rng: np.random.Generator, max_denominator: int, low: int, high: int) -> Fraction:
    # numerator drawn in [low * q, high * q] for a random q <= max_denominator
    denominator = int(rng.integers(1, max_denominator + 1))
    numerator = int(rng.integers(low * denominator, high * denominator + 1))
    return Fraction(numerator, denominator)

def _positive_rational(rng: np.random.Generator, max_denominator: int) -> Fraction:
    denominator = int(rng.integers(1, max_denominator + 1))
    numerator = int(rng.integers(1, generator_constants.RANDOM_MAX_NUMERATOR_FACTOR * denominator + 1))
    return Fraction(numerator, denominator)

def _random_tree(rng: np.random.Generator, size: int) -> nx.Graph:
    if size == 2:
        return nx.path_graph(2)
    sequence = [int(value) for value in rng.integers(0, size, size=size - 2)]
    return nx.from_prufer_sequence(sequence)

def gen_random(
    points: int,
    seed: int,
    profile: str = generator_constants.PROFILE_GENERIC,
    max_denominator: Optional[int] = None,
) -> FiniteMetricSpace:
    """
    Function to draw a reproducible rational metric.
    generic: every distance drawn, then repaired by shortest-path closure.
    near-degenerate: a random spanning tree plus some extra edges, never all of
    them, so with 3 or more points some triple is exactly collinear.
    :param points: at least 2
    :param seed:
    :param profile:
    :param max_denominator: defaults to settings.RANDOM_MAX_DENOMINATOR
    :return:
    """
    if points < 2:
        raise InvalidArgumentError(general_constants.DETAIL_SPACE_TOO_SMALL)
    max_denominator = settings.RANDOM_MAX_DENOMINATOR if max_denominator is None else max_denominator
    rng = np.random.default_rng(seed)

    if profile == generator_constants.PROFILE_GENERIC:
        weights = [[Fraction(0)] * points for _ in range(points)]
        for i in range(points):
            for j in range(i + 1, points):
                weights[i][j] = weights[j][i] = _positive_rational(rng, max_denominator)
    elif profile == generator_constants.PROFILE_NEAR_DEGENERATE:
        graph = _random_tree(rng, points)
        non_edges = [
            (i, j) for i in range(points) for j in range(i + 1, points) if not graph.has_edge(i, j)
        ]
        chosen = [
            edge for edge in non_edges
            if int(rng.integers(0, generator_constants.NEAR_DEGENERATE_EXTRA_EDGE_RATE)) == 0
        ]
        if non_edges and len(chosen) == len(non_edges):
            chosen.pop()
        graph.add_edges_from(chosen)
        for u, v in sorted(tuple(sorted(edge)) for edge in graph.edges()):
            graph[u][v]["weight"] = _positive_rational(rng, max_denominator)
        unreachable = 1 + sum((data["weight"] for _, _, data in graph.edges(data=True)), Fraction(0))
        weights = [
            [
                Fraction(0) if i == j
                else graph[i][j]["weight"] if graph.has_edge(i, j)
                else unreachable
                for j in range(points)
            ]
            for i in range(points)
        ]
    else:
        raise InvalidArgumentError(f"Unknown random profile {profile!r}.")

    dist, _ = shortest_path_closure(weights)
    logger.debug(f"gen_random: {points} points, seed {seed}, profile {profile}")
    return _space([str(i) for i in range(points)], dist)

def repair_metric(dist: List[List[Fraction]]) -> List[List[Fraction]]:
    """Shortest-path closure of a symmetric positive matrix; a metric is returned unchanged."""
    repaired, _ = shortest_path_closure(dist)
    return repaired

def generate(spec: GeneratorSpec) -> FiniteMetricSpace:
    """
    Function to dispatch a generator request
    :param spec:
    :return:
    """
    if spec.kind == generator_constants.GENERATOR_STAR:
        return gen_star(spec.size)
    if spec.kind == generator_constants.GENERATOR_C0_TRUNCATION:
        return gen_c0_truncation(spec.size)
    if spec.kind == generator_constants.GENERATOR_LINE:
        return gen_line(spec.size)
    return gen_random(spec.size, spec.seed or 0, spec.profile)

def gen_random_system(
    space: FiniteMetricSpace,
    pairs: int,
    seed: int,
    max_denominator: Optional[int] = None,
) -> MoleculeSystem:
    """
    Function to draw a normalized system of `pairs` molecules on distinct points
    :param space: at least two points
    :param pairs: at least 1
    :param seed:
    :param max_denominator:
    :return:
    """
    if space.size < 2:
        raise InvalidArgumentError(general_constants.DETAIL_SPACE_TOO_SMALL)
    if pairs < 1:
        raise InvalidArgumentError(f"gen_random_system needs at least one pair, got {pairs}.")
    max_denominator = settings.RANDOM_MAX_DENOMINATOR if max_denominator is None else max_denominator
    rng = np.random.default_rng(seed)
    chosen = []
    for _ in range(pairs):
        x = int(rng.integers(0, space.size))
        y = int(rng.integers(0, space.size - 1))
        if y >= x:
            y += 1
        chosen.append((x, y))
    weights = tuple(_positive_rational(rng, max_denominator) for _ in range(pairs))
    return molecule_system_service.normalize(MoleculeSystem(pairs=tuple(chosen), weights=weights))

def gen_random_element(
    space: FiniteMetricSpace,
    seed: int,
    max_denominator: Optional[int] = None,
) -> PointMassElement:
    """
    Function to draw an element with random signed coefficients on a random
    nonempty subset of the non-base points
    :param space:
    :param seed:
    :param max_denominator:
    :return:
    """
    max_denominator = settings.RANDOM_MAX_DENOMINATOR if max_denominator is None else max_denominator
    rng = np.random.default_rng(seed)
    others = [point for point in range(space.size) if point != space.base]
    coefficients: Dict[int, Fraction] = {}
    for point in others:
        if int(rng.integers(0, 2)) == 0 and (coefficients or point != others[-1]):
            continue
        value = _positive_rational(rng, max_denominator)
        coefficients[point] = value if int(rng.integers(0, 2)) == 0 else -value
    return PointMassElement(coefficients=coefficients)

def gen_lipschitz_perturbation(
    space: FiniteMetricSpace,
    f: LipschitzFunction,
    t: Fraction,
    seed: int,
    max_denominator: Optional[int] = None,
) -> LipschitzFunction:
    """
    Function to mix f with a random 1-Lipschitz h vanishing at the base:
    (1 - t) f + t h, where h(x) = min_p r_p + d(p, x) shifted to the base
    :param space:
    :param f: 1-Lipschitz, vanishing at the base
    :param t: in [0, 1]
    :param seed:
    :param max_denominator:
    :return:
    """
    if not 0 <= t <= 1:
        raise InvalidArgumentError(f"The mixing weight must lie in [0, 1], got {t}.")
    max_denominator = settings.RANDOM_MAX_DENOMINATOR if max_denominator is None else max_denominator
    rng = np.random.default_rng(seed)
    _, diameter = metric_core_service.separation(space)
    offsets = [
        _random_rational(rng, max_denominator, 0, int(diameter.numerator // diameter.denominator) + 1)
        for _ in range(space.size)
    ]
    raw = [min(offsets[p] + space.dist[p][x] for p in range(space.size)) for x in range(space.size)]
    h = [value - raw[space.base] for value in raw]
    values = tuple((1 - t) * f.values[x] + t * h[x] for x in range(space.size))
    return LipschitzFunction(
        values=values,
        lip_constant=norming_builder_service.lipschitz_constant(space, values),
    )
