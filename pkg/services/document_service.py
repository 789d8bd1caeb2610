from fractions import Fraction
from typing import Optional, Tuple

from constants import general as general_constants
from core.configs import settings
from core.exceptions import ParseError, ResourceLimitError
from schemas import (
    ElementDocument,
    FiniteMetricSpace,
    LipschitzFunction,
    LipschitzFunctionDocument,
    MoleculeSystem,
    PointMassElement,
    SpaceDocument,
    SystemDocument,
    ValidationReport,
)
from services import metric_core_service, molecule_system_service, norming_builder_service


def _check_points(count: int, max_points: Optional[int]) -> None:
    max_points = settings.MAX_POINTS if max_points is None else max_points
    if count > max_points:
        raise ResourceLimitError(f"At most {max_points} points are supported, got {count}.")

def _index(space: FiniteMetricSpace, label: str) -> int:
    index = space.index_of(label)
    if index is None:
        raise ParseError(f"{general_constants.DETAIL_LABEL_UNKNOWN} Got: {label!r}")
    return index

def validate_document(document: SpaceDocument, max_points: Optional[int] = None) -> ValidationReport:
    """
    Function to report every metric axiom violation of a space document
    :param document:
    :param max_points: defaults to settings.MAX_POINTS
    :return:
    """
    _check_points(len(document.labels), max_points)
    return metric_core_service.validate_space(document.labels, document.dist, document.base)

def resolve_space(document: SpaceDocument, max_points: Optional[int] = None) -> FiniteMetricSpace:
    """
    Function to turn a space document into a validated space
    :param document:
    :param max_points: defaults to settings.MAX_POINTS
    :return:
    """
    _check_points(len(document.labels), max_points)
    return metric_core_service.build_space(document.labels, document.dist, document.base)

def resolve_system(space: FiniteMetricSpace, document: SystemDocument) -> MoleculeSystem:
    """
    Function to resolve pair labels and check the weights of a system document
    :param space:
    :param document:
    :return:
    """
    if len(document.pairs) != len(document.weights):
        raise ParseError(general_constants.DETAIL_PAIRS_WEIGHTS_LENGTH)
    for position, weight in enumerate(document.weights, start=1):
        if weight <= 0:
            raise ParseError(f"{general_constants.DETAIL_WEIGHT_NOT_POSITIVE} Weight {position}: {weight}")
    system = MoleculeSystem(
        pairs=tuple((_index(space, x), _index(space, y)) for x, y in document.pairs),
        weights=tuple(document.weights),
    )
    molecule_system_service.ensure_valid_system(space, system)
    return system

def resolve_element(space: FiniteMetricSpace, document: ElementDocument) -> PointMassElement:
    """
    Function to resolve an element document; the base coefficient and zero
    coefficients are dropped
    :param space:
    :param document:
    :return:
    """
    coefficients = {}
    for label, value in document.coeffs.items():
        index = _index(space, label)
        if index != space.base and value != 0:
            coefficients[index] = value
    return PointMassElement(coefficients=dict(sorted(coefficients.items())))

def resolve_function(space: FiniteMetricSpace, document: LipschitzFunctionDocument) -> LipschitzFunction:
    """
    Function to resolve a function document; unlisted points take 0 and the
    Lipschitz constant is recomputed
    :param space:
    :param document:
    :return:
    """
    values = [Fraction(0)] * space.size
    for label, value in document.values.items():
        values[_index(space, label)] = value
    return LipschitzFunction(
        values=tuple(values),
        lip_constant=norming_builder_service.lipschitz_constant(space, values),
        base_pinned=values[space.base] == 0,
    )

def space_to_document(space: FiniteMetricSpace) -> SpaceDocument:
    return SpaceDocument(
        labels=list(space.labels),
        base=space.labels[space.base],
        dist=[list(row) for row in space.dist],
    )

def system_to_document(space: FiniteMetricSpace, system: MoleculeSystem) -> SystemDocument:
    return SystemDocument(
        pairs=[label_pair(space, pair) for pair in system.pairs],
        weights=list(system.weights),
    )

def label_pair(space: FiniteMetricSpace, pair: Tuple[int, int]) -> Tuple[str, str]:
    return space.labels[pair[0]], space.labels[pair[1]]
