"""
Independent re-verification of certificates from raw distances.
Every check raises CertificateMismatchError on failure and returns None otherwise.
"""
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from constants import general as general_constants
from constants.services import differentiability as differentiability_constants
from core.exceptions import CertificateMismatchError
from core.logger import logger
from core.utilities import new_request_id
from schemas import (
    BetaMatrix,
    DiffVerdict,
    FiniteMetricSpace,
    L1BasisVerdict,
    MoleculeSystem,
    NegativeCycleWitness,
    NonUniqueOnNFailure,
    NotAttainingFailure,
    PointMassElement,
    PotentialTable,
    TransportCertificate,
    UncoveredFailure,
)
from services import potential_engine_service


def _fail(check: str, reason: str) -> None:
    req_id = new_request_id()
    logger.error(f"{check}: {req_id} {reason}")
    raise CertificateMismatchError(f"{general_constants.DETAIL_CERTIFICATE_MISMATCH} {reason} ({req_id})")

def _raw_beta(space: FiniteMetricSpace, pairs: Sequence[Tuple[int, int]]) -> List[List[Fraction]]:
    dist = space.dist
    return [[dist[x_j][y_k] - dist[x_j][y_j] for _, y_k in pairs] for x_j, y_j in pairs]

def _lipschitz_at_most_one(space: FiniteMetricSpace, values: Sequence[Fraction]) -> bool:
    return all(
        abs(values[p] - values[q]) <= space.dist[p][q]
        for p in range(space.size)
        for q in range(p + 1, space.size)
    )

def verify_witness(space: FiniteMetricSpace, pairs: Sequence[Tuple[int, int]], witness: NegativeCycleWitness) -> None:
    """
    Function to re-sum a negative cycle as cross distances minus aligned distances
    :param space:
    :param pairs: the (possibly oriented) pairs the witness indexes
    :param witness:
    :return:
    """
    cycle = witness.cycle
    if not cycle or len(set(cycle)) != len(cycle) or not all(0 <= i < len(pairs) for i in cycle):
        _fail("verify_witness", f"cycle {cycle} is not a simple cycle of pair indices")
    if cycle[0] != min(cycle):
        _fail("verify_witness", f"cycle {cycle} does not start at its smallest index")
    aligned = sum((space.dist[pairs[i][0]][pairs[i][1]] for i in cycle), Fraction(0))
    cross = sum(
        (space.dist[pairs[cycle[r]][0]][pairs[cycle[(r + 1) % len(cycle)]][1]] for r in range(len(cycle))),
        Fraction(0),
    )
    if cross - aligned != witness.cycle_sum or witness.cycle_sum >= 0:
        _fail("verify_witness", f"cycle sum {witness.cycle_sum} re-sums to {cross - aligned}")

def verify_table(space: FiniteMetricSpace, system: MoleculeSystem, table: PotentialTable) -> None:
    """
    Function to check the potentials are feasible, anchored and below the raw beta
    :param space:
    :param system:
    :param table:
    :return:
    """
    beta = _raw_beta(space, system.pairs)
    size = len(beta)
    if table.size != size:
        _fail("verify_table", f"table size {table.size} for {size} pairs")
    if size and table.alphas[table.anchor] != 0:
        _fail("verify_table", "anchor potential is not 0")
    if not potential_engine_service.is_feasible(beta, table.alphas):
        _fail("verify_table", "potentials violate a difference constraint")
    for j in range(size):
        if table.closure[j][j] != 0:
            _fail("verify_table", f"closure diagonal {j} is not 0")
        for k in range(size):
            if table.closure[j][k] > beta[j][k]:
                _fail("verify_table", f"closure exceeds beta at ({j}, {k})")
            if table.closure[j][k] + table.closure[k][j] < 0:
                _fail("verify_table", f"negative rigidity gap at ({j}, {k})")

def verify_transport(space: FiniteMetricSpace, element: PointMassElement, certificate: TransportCertificate) -> None:
    """
    Function to re-cost the plan, re-check its balances and the dual, and
    compare both objective values
    :param space:
    :param element:
    :param certificate:
    :return:
    """
    balance: Dict[int, Fraction] = defaultdict(Fraction)
    for leg in certificate.plan:
        if leg.mass <= 0:
            _fail("verify_transport", f"non-positive mass on leg {leg.source}->{leg.sink}")
        balance[leg.source] += leg.mass
        balance[leg.sink] -= leg.mass
    expected: Dict[int, Fraction] = defaultdict(Fraction)
    for point, value in element.coefficients.items():
        if point != space.base:
            expected[point] += value
    residual = -sum(expected.values(), Fraction(0))
    expected[space.base] += residual
    for point in range(space.size):
        if balance[point] != expected[point]:
            _fail("verify_transport", f"plan imbalance at {space.labels[point]}")

    plan_cost = sum((leg.mass * space.dist[leg.source][leg.sink] for leg in certificate.plan), Fraction(0))
    dual = certificate.dual.values
    if len(dual) != space.size or dual[space.base] != 0:
        _fail("verify_transport", "dual does not vanish at the base")
    if not _lipschitz_at_most_one(space, dual):
        _fail("verify_transport", "dual is not 1-Lipschitz")
    dual_value = sum(
        (value * dual[point] for point, value in element.coefficients.items()),
        Fraction(0),
    )
    if not plan_cost == dual_value == certificate.value:
        _fail("verify_transport", f"plan {plan_cost}, dual {dual_value}, value {certificate.value}")

def _verify_frechet(space: FiniteMetricSpace, system: MoleculeSystem, verdict: DiffVerdict) -> None:
    f = verdict.norming
    if f is None or verdict.coverage is None:
        _fail("verify_verdict", "Frechet verdict without norming function or coverage")
    values = f.values
    if len(values) != space.size or values[space.base] != 0:
        _fail("verify_verdict", "norming function does not vanish at the base")
    if not _lipschitz_at_most_one(space, values):
        _fail("verify_verdict", "norming function is not 1-Lipschitz")
    for index, (x, y) in enumerate(system.pairs):
        if values[x] - values[y] != space.dist[x][y]:
            _fail("verify_verdict", f"pair {index + 1} is not normed")
    domain = {point for pair in system.pairs for point in pair}
    dist = space.dist
    for x in range(space.size):
        if x not in verdict.coverage:
            _fail("verify_verdict", f"point {space.labels[x]} has no coverage entry")
        s, t = verdict.coverage[x]
        if s == t or s not in domain or t not in domain:
            _fail("verify_verdict", f"coverage pair of {space.labels[x]} is not two points of N")
        if values[t] - values[s] != dist[t][s]:
            _fail("verify_verdict", f"coverage pair of {space.labels[x]} is not normed")
        if dist[s][x] + dist[t][x] != dist[s][t]:
            _fail("verify_verdict", f"{space.labels[x]} is not on its coverage segment")

def _verify_non_unique(space: FiniteMetricSpace, system: MoleculeSystem, failure: NonUniqueOnNFailure) -> None:
    beta = _raw_beta(space, system.pairs)
    j, k = failure.pair
    for alphas in (failure.alphas_upper, failure.alphas_lower):
        if len(alphas) != len(beta) or not potential_engine_service.is_feasible(beta, alphas):
            _fail("verify_verdict", "NonUniqueOnN potentials are not feasible")
    spread = (failure.alphas_upper[j] - failure.alphas_upper[k]) - (
        failure.alphas_lower[j] - failure.alphas_lower[k]
    )
    if spread <= 0 or spread != failure.rigidity_gap:
        _fail("verify_verdict", f"NonUniqueOnN spread {spread} against gap {failure.rigidity_gap}")

def _verify_uncovered(space: FiniteMetricSpace, system: MoleculeSystem, failure: UncoveredFailure) -> None:
    if failure.upper_value <= failure.lower_value:
        _fail("verify_verdict", "Uncovered point has coinciding extensions")
    # any feasible potential gives f on N; rebuild one and recompute both extensions at the point
    raw = _raw_beta(space, system.pairs)
    result = potential_engine_service.closure(BetaMatrix(beta=tuple(tuple(row) for row in raw)))
    if isinstance(result, NegativeCycleWitness):
        _fail("verify_verdict", "Uncovered verdict on a family with a negative cycle")
    values: Dict[int, Fraction] = {}
    for (x, y), alpha in zip(system.pairs, result.alphas):
        values[y] = alpha
        values[x] = alpha + space.dist[x][y]
    p = failure.point
    upper = min(value + space.dist[q][p] for q, value in values.items())
    lower = max(value - space.dist[q][p] for q, value in values.items())
    if upper - lower != failure.upper_value - failure.lower_value:
        _fail("verify_verdict", f"extension gap at {space.labels[p]} re-computes to {upper - lower}")

def verify_verdict(space: FiniteMetricSpace, system: MoleculeSystem, verdict: DiffVerdict) -> None:
    """
    Function to re-check a differentiability verdict against raw distances
    :param space:
    :param system:
    :param verdict:
    :return:
    """
    if verdict.kind == differentiability_constants.VERDICT_FRECHET:
        _verify_frechet(space, system, verdict)
        return
    failure = verdict.failure
    if isinstance(failure, NotAttainingFailure):
        verify_witness(space, system.pairs, failure.witness)
    elif isinstance(failure, NonUniqueOnNFailure):
        _verify_non_unique(space, system, failure)
    elif isinstance(failure, UncoveredFailure):
        _verify_uncovered(space, system, failure)
    else:
        _fail("verify_verdict", "NotGateaux verdict without a failure")

def verify_l1(space: FiniteMetricSpace, system: MoleculeSystem, verdict: L1BasisVerdict) -> None:
    """
    Function to re-check a failing orientation: the first pair keeps its
    orientation and the witness re-sums negative on the oriented pairs
    :param space:
    :param system:
    :param verdict:
    :return:
    """
    if verdict.isometric_l1:
        return
    pattern = verdict.pattern
    if pattern is None or verdict.witness is None or len(pattern) != len(system.pairs) or pattern[0]:
        _fail("verify_l1", "failing l1 verdict without a valid orientation pattern")
    oriented = [(y, x) if flipped else (x, y) for (x, y), flipped in zip(system.pairs, pattern)]
    verify_witness(space, oriented, verdict.witness)
