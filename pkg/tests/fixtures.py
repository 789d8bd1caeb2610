from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from constants.tests.spaces import BASE_LABEL, LINE_DIST, LINE_LABELS, TRI_DIST, TRI_LABELS
from schemas import FiniteMetricSpace, MoleculeSystem
from services import generators_service, metric_core_service


def tri_space() -> FiniteMetricSpace:
    return metric_core_service.build_space(TRI_LABELS, TRI_DIST, BASE_LABEL)

def line_space() -> FiniteMetricSpace:
    return metric_core_service.build_space(LINE_LABELS, LINE_DIST, BASE_LABEL)

def system(pairs: Sequence[Tuple[int, int]], weights: Sequence[object]) -> MoleculeSystem:
    return MoleculeSystem(pairs=tuple(pairs), weights=tuple(Fraction(weight) for weight in weights))

def dyadic_weights(k: int) -> Tuple[Fraction, ...]:
    """Weights proportional to 2^-n for n = 1..k, summing to 1."""
    raw = [Fraction(1, 2 ** n) for n in range(1, k + 1)]
    total = sum(raw)
    return tuple(weight / total for weight in raw)

def to_base_system(k: int) -> MoleculeSystem:
    """Pairs (n, 0) for n = 1..k with dyadic weights."""
    return system([(n, 0) for n in range(1, k + 1)], dyadic_weights(k))

def random_instances(count: int, seed: int, max_points: int = 6, max_pairs: int = 5) -> List[Tuple[FiniteMetricSpace, MoleculeSystem]]:
    """
    Seeded random (space, normalized system) instances, alternating the
    generic and near-degenerate profiles
    """
    rng = np.random.default_rng(seed)
    instances = []
    for index in range(count):
        points = int(rng.integers(2, max_points + 1))
        pairs = int(rng.integers(1, max_pairs + 1))
        profile = "generic" if index % 2 == 0 else "near-degenerate"
        space = generators_service.gen_random(points, seed + index, profile)
        instances.append((space, generators_service.gen_random_system(space, pairs, seed + index)))
    return instances
