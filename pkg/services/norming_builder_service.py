from fractions import Fraction
from typing import Dict, Sequence, Tuple, Union

from constants import general as general_constants
from core.exceptions import InternalConsistencyError, InvalidArgumentError
from core.logger import logger
from core.utilities import new_request_id
from schemas import (
    FiniteMetricSpace,
    LipschitzFunction,
    MoleculeSystem,
    NegativeCycleWitness,
    PartialFunction,
    PotentialTable,
)
from services import molecule_system_service, potential_engine_service

ROLE_X = "x"
ROLE_Y = "y"

# (earlier role, later role) -> conflict case
CONFLICT_CASES = {
    (ROLE_Y, ROLE_Y): "Case 1 (y_j = y_k)",
    (ROLE_X, ROLE_X): "Case 2 (x_j = x_k)",
    (ROLE_Y, ROLE_X): "Case 3 (y_j = x_k)",
    (ROLE_X, ROLE_Y): "Case 3 (y_j = x_k)",
}


def lipschitz_constant(space: FiniteMetricSpace, values: Sequence[Fraction]) -> Fraction:
    """
    Function to compute max |f(p) - f(q)| / d(p, q) exactly
    :param space:
    :param values: f at every point
    :return: 0 on a one-point space
    """
    best = Fraction(0)
    dist = space.dist
    for p in range(space.size):
        for q in range(p + 1, space.size):
            ratio = abs(values[p] - values[q]) / dist[p][q]
            if ratio > best:
                best = ratio
    return best

def build_on_N(
    space: FiniteMetricSpace,
    system: MoleculeSystem,
    table: PotentialTable,
) -> PartialFunction:
    """
    Function to assign f(y_i) = alpha_i and f(x_i) = alpha_i + d(x_i, y_i) on
    N = {x_i, y_i}, then shift so the base vanishes when it lies in N.
    :param space:
    :param system:
    :param table: a successful closure of beta_matrix(space, system)
    :return:
    """
    molecule_system_service.ensure_valid_system(space, system)
    if table.size != len(system.pairs):
        raise InvalidArgumentError(
            f"{general_constants.DETAIL_PAIRS_WEIGHTS_LENGTH} Table size {table.size}."
        )
    values: Dict[int, Fraction] = {}
    origin: Dict[int, Tuple[str, int]] = {}

    def assign(point: int, value: Fraction, role: str, index: int) -> None:
        if point not in values:
            values[point] = value
            origin[point] = (role, index)
            return
        if values[point] != value:
            earlier_role, earlier_index = origin[point]
            case = CONFLICT_CASES[(earlier_role, role)]
            req_id = new_request_id()
            logger.error(
                f"build_on_N: {req_id} {case} conflict at {space.labels[point]} "
                f"between pairs {earlier_index + 1} and {index + 1}"
            )
            raise InternalConsistencyError(
                f"Conflicting assignment, {case}, pairs {earlier_index + 1} and {index + 1} ({req_id})",
                context=(earlier_index, index),
            )

    for index, ((x, y), alpha) in enumerate(zip(system.pairs, table.alphas)):
        assign(y, alpha, ROLE_Y, index)
        assign(x, alpha + space.dist[x][y], ROLE_X, index)

    if space.base in values:
        shift = values[space.base]
        return PartialFunction(
            values={point: value - shift for point, value in sorted(values.items())},
            base_pinned=True,
        )
    return PartialFunction(values=dict(sorted(values.items())), base_pinned=False)

def check_one_lipschitz(space: FiniteMetricSpace, partial: PartialFunction) -> None:
    """
    Function to reject partial functions that are not 1-Lipschitz on their domain
    :param space:
    :param partial:
    :return:
    """
    if not partial.values:
        raise InvalidArgumentError(f"{general_constants.DETAIL_NOT_LIPSCHITZ} Empty domain.")
    domain = partial.domain
    for position, p in enumerate(domain):
        if not 0 <= p < space.size:
            raise InvalidArgumentError(f"{general_constants.DETAIL_INDEX_OUT_OF_RANGE} Got: {p}")
        for q in domain[position + 1:]:
            if abs(partial.values[p] - partial.values[q]) > space.dist[p][q]:
                raise InvalidArgumentError(
                    f"{general_constants.DETAIL_NOT_LIPSCHITZ} "
                    f"Pair: ({space.labels[p]}, {space.labels[q]})",
                    context=(p, q),
                )

def _extension(space: FiniteMetricSpace, partial: PartialFunction, upper: bool) -> LipschitzFunction:
    check_one_lipschitz(space, partial)
    known = sorted(partial.values.items())
    dist = space.dist
    if upper:
        values = tuple(min(value + dist[p][x] for p, value in known) for x in range(space.size))
    else:
        values = tuple(max(value - dist[p][x] for p, value in known) for x in range(space.size))
    return LipschitzFunction(
        values=values,
        lip_constant=lipschitz_constant(space, values),
        base_pinned=space.base in partial.values and partial.values[space.base] == 0,
    )

def extend_upper(space: FiniteMetricSpace, partial: PartialFunction) -> LipschitzFunction:
    """
    Function to build the largest 1-Lipschitz extension g1(x) = min_p f(p) + d(p, x)
    :param space:
    :param partial:
    :return:
    """
    return _extension(space, partial, upper=True)

def extend_lower(space: FiniteMetricSpace, partial: PartialFunction) -> LipschitzFunction:
    """
    Function to build the smallest 1-Lipschitz extension g2(x) = max_p f(p) - d(p, x)
    :param space:
    :param partial:
    :return:
    """
    return _extension(space, partial, upper=False)

def verify_norming(space: FiniteMetricSpace, system: MoleculeSystem, f: LipschitzFunction) -> bool:
    """
    Function to check f(x_i) - f(y_i) = d(x_i, y_i) for every pair, with f 1-Lipschitz
    :param space:
    :param system:
    :param f:
    :return:
    """
    if len(f.values) != space.size:
        return False
    if lipschitz_constant(space, f.values) > 1:
        return False
    return all(f.values[x] - f.values[y] == space.dist[x][y] for x, y in system.pairs)

def shift_to_base(space: FiniteMetricSpace, f: LipschitzFunction) -> LipschitzFunction:
    """Subtract f(base) so the function vanishes at the base."""
    shift = f.values[space.base]
    return LipschitzFunction(
        values=tuple(value - shift for value in f.values),
        lip_constant=f.lip_constant,
        base_pinned=True,
    )

def norming_function(
    space: FiniteMetricSpace,
    system: MoleculeSystem,
) -> Union[LipschitzFunction, NegativeCycleWitness]:
    """
    Function to construct a norming function for a cyclically monotone family:
    build_on_N, take the upper extension and make it vanish at the base.
    :param space:
    :param system:
    :return: the witness when the family is not cyclically monotone
    """
    result = potential_engine_service.closure(molecule_system_service.beta_matrix(space, system))
    if isinstance(result, NegativeCycleWitness):
        return result
    partial = build_on_N(space, system, result)
    return shift_to_base(space, extend_upper(space, partial))
