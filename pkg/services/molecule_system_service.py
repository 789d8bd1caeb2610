from collections import defaultdict
from fractions import Fraction
from typing import Dict, Sequence

from constants import general as general_constants
from core.exceptions import InvalidArgumentError
from schemas import BetaMatrix, FiniteMetricSpace, MoleculeSystem, PointMassElement


def ensure_valid_system(space: FiniteMetricSpace, system: MoleculeSystem) -> None:
    """
    Function to check that every pair joins two distinct points of the space
    :param space:
    :param system:
    :return:
    """
    for index, (x, y) in enumerate(system.pairs):
        for point in (x, y):
            if not 0 <= point < space.size:
                raise InvalidArgumentError(
                    f"{general_constants.DETAIL_INDEX_OUT_OF_RANGE} Pair {index + 1}: {point}"
                )
        if x == y:
            raise InvalidArgumentError(
                f"{general_constants.DETAIL_PAIR_DEGENERATE} Pair {index + 1}: {space.labels[x]}"
            )

def beta_matrix(space: FiniteMetricSpace, system: MoleculeSystem) -> BetaMatrix:
    """
    Function to build beta[j][k] = d(x_j, y_k) - d(x_j, y_j)
    :param space:
    :param system:
    :return:
    """
    ensure_valid_system(space, system)
    dist = space.dist
    pairs = system.pairs
    beta = tuple(
        tuple(dist[x_j][y_k] - dist[x_j][y_j] for _, y_k in pairs)
        for x_j, y_j in pairs
    )
    return BetaMatrix(beta=beta)

def to_point_masses(space: FiniteMetricSpace, system: MoleculeSystem) -> PointMassElement:
    """
    Function to expand sum_i weights[i] * (delta_x - delta_y) / d(x, y) into point masses
    :param space:
    :param system:
    :return:
    """
    ensure_valid_system(space, system)
    coefficients: Dict[int, Fraction] = defaultdict(Fraction)
    for (x, y), weight in zip(system.pairs, system.weights):
        mass = weight / space.dist[x][y]
        coefficients[x] += mass
        coefficients[y] -= mass
    return PointMassElement(
        coefficients={
            point: value
            for point, value in sorted(coefficients.items())
            if point != space.base and value != 0
        }
    )

def normalize(system: MoleculeSystem) -> MoleculeSystem:
    """
    Function to scale the weights so they sum to 1
    :param system:
    :return:
    """
    total = system.total_weight
    return MoleculeSystem(
        pairs=system.pairs,
        weights=tuple(weight / total for weight in system.weights),
    )

def evaluate(
    space: FiniteMetricSpace,
    system: MoleculeSystem,
    values: Sequence[Fraction],
) -> Fraction:
    """
    Function to compute f(mu) = sum_i weights[i] * (f(x_i) - f(y_i)) / d(x_i, y_i)
    :param space:
    :param system:
    :param values: f at every point
    :return:
    """
    return sum(
        (weight * (values[x] - values[y]) / space.dist[x][y]
         for (x, y), weight in zip(system.pairs, system.weights)),
        Fraction(0),
    )

def evaluate_element(element: PointMassElement, values: Sequence[Fraction]) -> Fraction:
    """Pairing of a point-mass element with a function vanishing at the base."""
    return sum(
        (coefficient * values[point] for point, coefficient in element.coefficients.items()),
        Fraction(0),
    )

def merge_elements(*elements: PointMassElement) -> PointMassElement:
    totals: Dict[int, Fraction] = defaultdict(Fraction)
    for element in elements:
        for point, value in element.coefficients.items():
            totals[point] += value
    return PointMassElement(
        coefficients={point: value for point, value in sorted(totals.items()) if value != 0}
    )
