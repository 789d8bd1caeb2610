from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from constants import general as general_constants
from core.exceptions import InternalConsistencyError, InvalidArgumentError
from core.logger import logger
from core.utilities import new_request_id, reconstruct_path, shortest_path_closure
from schemas import (
    BetaMatrix,
    ClosureResult,
    FiniteMetricSpace,
    MoleculeSystem,
    MonotonicityVerdict,
    NegativeCycleWitness,
    PotentialTable,
)
from services import molecule_system_service


def _check_beta(beta: Sequence[Sequence[Fraction]]) -> None:
    size = len(beta)
    if any(len(row) != size for row in beta):
        raise InvalidArgumentError(general_constants.DETAIL_MATRIX_NOT_SQUARE)
    if any(beta[i][i] != 0 for i in range(size)):
        raise InvalidArgumentError(general_constants.DETAIL_DIAGONAL_NONZERO)

def cycle_sum(beta: Sequence[Sequence[Fraction]], cycle: Sequence[int]) -> Fraction:
    """beta[i_1][i_2] + ... + beta[i_m][i_1]"""
    return sum(
        (beta[cycle[r]][cycle[(r + 1) % len(cycle)]] for r in range(len(cycle))),
        Fraction(0),
    )

def rotate_to_smallest(cycle: Sequence[int]) -> Tuple[int, ...]:
    lead = cycle.index(min(cycle))
    return tuple(cycle[lead:]) + tuple(cycle[:lead])

def find_negative_cycle(beta: Sequence[Sequence[Fraction]]) -> Optional[NegativeCycleWitness]:
    """
    Function to extract a simple negative cycle with Bellman-Ford from a
    virtual source joined to every index at cost 0.
    A cycle in the predecessor graph after a relaxation in round n is negative.
    :param beta: arc weights, beta[j][k] is the arc j -> k
    :return: the witness, or None when every cycle is nonnegative
    """
    size = len(beta)
    distance = [Fraction(0)] * size
    predecessor: List[Optional[int]] = [None] * size
    relaxed_last = None
    for _ in range(size):
        relaxed_last = None
        for j in range(size):
            row = beta[j]
            for k in range(size):
                candidate = distance[j] + row[k]
                if candidate < distance[k]:
                    distance[k] = candidate
                    predecessor[k] = j
                    relaxed_last = k
        if relaxed_last is None:
            return None

    # land inside the cycle, then walk it once
    node = relaxed_last
    for _ in range(size):
        node = predecessor[node]
    walk = [node]
    current = predecessor[node]
    while current != node:
        walk.append(current)
        current = predecessor[current]
    cycle = rotate_to_smallest(list(reversed(walk)))
    total = cycle_sum(beta, cycle)
    if total >= 0:
        req_id = new_request_id()
        logger.error(f"find_negative_cycle: {req_id} predecessor cycle {cycle} has sum {total}")
        raise InternalConsistencyError(
            f"{general_constants.DETAIL_CERTIFICATE_MISMATCH} ({req_id})",
            context=cycle,
        )
    return NegativeCycleWitness(cycle=cycle, cycle_sum=total)

def closure(beta: BetaMatrix, anchor: int = 0) -> ClosureResult:
    """
    Function to solve the difference constraints alpha_k <= alpha_j + beta[k][j].
    Returns a negative cycle witness when none exist, otherwise the shortest
    beta-path closure B with alphas[j] = B[j][anchor] and the rigid pairs
    {j, k} with B[j][k] + B[k][j] = 0.
    :param beta:
    :param anchor: pair index pinned to alpha = 0
    :return:
    """
    matrix = beta.beta
    _check_beta(matrix)
    size = len(matrix)
    if size and not 0 <= anchor < size:
        raise InvalidArgumentError(f"{general_constants.DETAIL_INDEX_OUT_OF_RANGE} Anchor: {anchor}")

    closed, successor = shortest_path_closure(matrix)
    if any(closed[i][i] < 0 for i in range(size)):
        witness = find_negative_cycle(matrix)
        if witness is None:
            req_id = new_request_id()
            logger.error(f"closure: {req_id} negative diagonal without a Bellman-Ford cycle")
            raise InternalConsistencyError(f"{general_constants.DETAIL_CERTIFICATE_MISMATCH} ({req_id})")
        logger.debug(f"closure: negative cycle {witness.cycle} with sum {witness.cycle_sum}")
        return witness

    rigid_pairs = tuple(
        (j, k)
        for j in range(size)
        for k in range(j + 1, size)
        if closed[j][k] + closed[k][j] == 0
    )
    return PotentialTable(
        beta=matrix,
        closure=tuple(tuple(row) for row in closed),
        successor=tuple(tuple(row) for row in successor),
        alphas=tuple(closed[j][anchor] for j in range(size)),
        anchor=anchor,
        globally_unique=len(rigid_pairs) == size * (size - 1) // 2,
        rigid_pairs=rigid_pairs,
    )

def _check_pair(table: PotentialTable, j: int, k: int) -> None:
    for index in (j, k):
        if not 0 <= index < table.size:
            raise InvalidArgumentError(f"{general_constants.DETAIL_INDEX_OUT_OF_RANGE} Got: {index}")
    if j == k:
        raise InvalidArgumentError(general_constants.DETAIL_EQUAL_ENDPOINTS)

def rigid_chain(table: PotentialTable, j: int, k: int) -> Optional[Tuple[int, ...]]:
    """
    Function to exhibit the zero-sum cycle through j and k that forces alpha_j - alpha_k.
    The result concatenates a minimizing j -> k path with a minimizing k -> j path
    and starts at j. When the two paths share an interior index the result is a
    closed walk rather than a simple cycle; its beta-sum is still 0.
    :param table:
    :param j:
    :param k:
    :return: None when {j, k} is not rigid
    """
    _check_pair(table, j, k)
    if table.rigidity_gap(j, k) != 0:
        return None
    forward = reconstruct_path(table.successor, j, k)
    backward = reconstruct_path(table.successor, k, j)
    chain = tuple(forward[:-1] + backward[:-1])
    if cycle_sum(table.beta, chain) != 0:
        raise InternalConsistencyError(
            f"{general_constants.DETAIL_CERTIFICATE_MISMATCH} rigid_chain({j}, {k})",
            context=chain,
        )
    return chain

def check_cyclical_monotonicity(
    space: FiniteMetricSpace,
    system: MoleculeSystem,
) -> MonotonicityVerdict:
    """
    Function to test sum_r d(x_{i_r}, y_{i_r}) <= sum_r d(x_{i_r}, y_{i_{r+1}}) over every cycle of pairs
    :param space:
    :param system: only the pairs are read
    :return:
    """
    result = closure(molecule_system_service.beta_matrix(space, system))
    if isinstance(result, NegativeCycleWitness):
        return MonotonicityVerdict(holds=False, witness=result)
    return MonotonicityVerdict(holds=True)

def eps_rigid(table: PotentialTable, j: int, k: int, eps: Fraction) -> bool:
    """Strict: B[j][k] + B[k][j] < eps."""
    _check_pair(table, j, k)
    if eps <= 0:
        raise InvalidArgumentError(general_constants.DETAIL_EPS_NOT_POSITIVE)
    return table.rigidity_gap(j, k) < eps

def extreme_potentials(
    table: PotentialTable,
    j: int,
    k: int,
) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    """
    Function to get the two feasible potentials stretching alpha_j - alpha_k to
    its bounds: alpha_i = B[i][k] gives B[j][k], alpha_i = -B[k][i] gives -B[k][j].
    :param table:
    :param j:
    :param k:
    :return: (upper, lower)
    """
    _check_pair(table, j, k)
    closed = table.closure
    upper = tuple(closed[i][k] for i in range(table.size))
    lower = tuple(-closed[k][i] for i in range(table.size))
    return upper, lower

def is_feasible(beta: Sequence[Sequence[Fraction]], alphas: Sequence[Fraction]) -> bool:
    """alpha_k <= alpha_j + beta[k][j] for every j, k."""
    size = len(beta)
    return all(
        alphas[k] <= alphas[j] + beta[k][j]
        for j in range(size)
        for k in range(size)
    )
