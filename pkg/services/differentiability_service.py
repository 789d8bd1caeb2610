from fractions import Fraction
from itertools import islice, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from constants import general as general_constants
from constants.services import differentiability as differentiability_constants
from core.configs import settings
from core.exceptions import InvalidArgumentError, NotAttainingError, ResourceLimitError
from core.logger import logger
from schemas import (
    DiffVerdict,
    FiniteMetricSpace,
    GateauxEpsReport,
    L1BasisVerdict,
    LipschitzFunction,
    MoleculeSystem,
    NegativeCycleWitness,
    NonUniqueOnNFailure,
    NotAttainingFailure,
    PartialFunction,
    PotentialTable,
    StabilityBound,
    StabilityCheck,
    UncoveredFailure,
    UncoveredPointReport,
)
from services import (
    metric_core_service,
    molecule_system_service,
    norming_builder_service,
    potential_engine_service,
)

PATTERN_BATCH_PER_WORKER = 64


def _check_eps(eps: Fraction) -> None:
    if eps <= 0:
        raise InvalidArgumentError(general_constants.DETAIL_EPS_NOT_POSITIVE)

def _check_nonempty(system: MoleculeSystem) -> None:
    # slacks are taken over pairs s != t in N
    if not system.pairs:
        raise InvalidArgumentError(general_constants.DETAIL_SYSTEM_EMPTY)

def _attaining_table(space: FiniteMetricSpace, system: MoleculeSystem) -> PotentialTable:
    result = potential_engine_service.closure(molecule_system_service.beta_matrix(space, system))
    if isinstance(result, NegativeCycleWitness):
        raise NotAttainingError(
            f"Not cyclically monotone: negative cycle {[index + 1 for index in result.cycle]}.",
            context=result,
        )
    return result

def _ordered_pairs(domain: Sequence[int]) -> Iterator[Tuple[int, int]]:
    for s in domain:
        for t in domain:
            if s != t:
                yield s, t

def pair_slack(space: FiniteMetricSpace, f: PartialFunction, s: int, t: int, x: int) -> Fraction:
    """
    Function to get the least eps for which (s, t) eps-covers x:
    max(excess of x over [s, t], d(t, s) - (f(t) - f(s))).
    x is eps-covered by (s, t) iff the slack is below eps; exactly covered iff it is 0.
    :param space:
    :param f: defined at s and t
    :param s:
    :param t:
    :param x:
    :return:
    """
    excess = metric_core_service.segment_excess(space, s, t, x)
    defect = space.dist[t][s] - (f.values[t] - f.values[s])
    return max(excess, defect)

def _best_slack(space: FiniteMetricSpace, f: PartialFunction, x: int) -> Tuple[Fraction, int, int]:
    best = None
    for s, t in _ordered_pairs(f.domain):
        slack = pair_slack(space, f, s, t, x)
        if best is None or slack < best[0]:
            best = (slack, s, t)
    return best

def decide(space: FiniteMetricSpace, system: MoleculeSystem) -> DiffVerdict:
    """
    Function to decide Frechet differentiability of the norm at
    mu = sum_i weights[i] * m_{x_i, y_i}.
    Steps: negative cycle -> NotAttaining; a non-rigid pair -> NonUniqueOnN;
    a point on no segment [s, t] with f(t) - f(s) = d(t, s) -> Uncovered;
    otherwise Frechet with the unique norming function.
    :param space: at least two points
    :param system: normalized
    :return:
    """
    if space.size < 2:
        raise InvalidArgumentError(general_constants.DETAIL_SPACE_TOO_SMALL)
    molecule_system_service.ensure_valid_system(space, system)
    if not system.normalized:
        raise InvalidArgumentError(
            f"{general_constants.DETAIL_NOT_NORMALIZED} Got: {system.total_weight}"
        )

    result = potential_engine_service.closure(molecule_system_service.beta_matrix(space, system))
    if isinstance(result, NegativeCycleWitness):
        logger.info(f"decide: not attaining, cycle {result.cycle}")
        return DiffVerdict(
            kind=differentiability_constants.VERDICT_NOT_GATEAUX,
            failure=NotAttainingFailure(witness=result),
        )
    table = result

    for j in range(table.size):
        for k in range(j + 1, table.size):
            gap = table.rigidity_gap(j, k)
            if gap > 0:
                upper, lower = potential_engine_service.extreme_potentials(table, j, k)
                logger.info(f"decide: pair ({j}, {k}) not rigid, gap {gap}")
                return DiffVerdict(
                    kind=differentiability_constants.VERDICT_NOT_GATEAUX,
                    failure=NonUniqueOnNFailure(
                        pair=(j, k),
                        rigidity_gap=gap,
                        alphas_upper=upper,
                        alphas_lower=lower,
                    ),
                )

    partial = norming_builder_service.build_on_N(space, system, table)
    upper_extension = norming_builder_service.extend_upper(space, partial)
    lower_extension = norming_builder_service.extend_lower(space, partial)

    coverage: Dict[int, Tuple[int, int]] = {}
    for x in range(space.size):
        witness = next(
            (
                (s, t)
                for s, t in _ordered_pairs(partial.domain)
                if pair_slack(space, partial, s, t, x) == 0
            ),
            None,
        )
        if witness is None:
            logger.info(f"decide: point {space.labels[x]} uncovered")
            return DiffVerdict(
                kind=differentiability_constants.VERDICT_NOT_GATEAUX,
                failure=UncoveredFailure(
                    point=x,
                    upper_value=upper_extension.values[x],
                    lower_value=lower_extension.values[x],
                ),
            )
        coverage[x] = witness

    return DiffVerdict(
        kind=differentiability_constants.VERDICT_FRECHET,
        norming=norming_builder_service.shift_to_base(space, upper_extension),
        coverage=coverage,
    )

def check_gateaux_eps(space: FiniteMetricSpace, system: MoleculeSystem, eps: Fraction) -> GateauxEpsReport:
    """
    Function to evaluate both eps-conditions for a cyclically monotone family:
    (i) pairs {j, k} with B[j][k] + B[k][j] >= eps fail;
    (ii) points x with no s != t in N such that x in [s, t]_eps and
    f(t) - f(s) > d(t, s) - eps fail, reported with their closest pair.
    :param space:
    :param system:
    :param eps: positive rational
    :return:
    """
    _check_eps(eps)
    _check_nonempty(system)
    table = _attaining_table(space, system)
    cond_i = tuple(
        (j, k)
        for j in range(table.size)
        for k in range(j + 1, table.size)
        if not potential_engine_service.eps_rigid(table, j, k, eps)
    )
    partial = norming_builder_service.build_on_N(space, system, table)
    cond_ii: List[UncoveredPointReport] = []
    for x in range(space.size):
        slack, s, t = _best_slack(space, partial, x)
        if slack >= eps:
            cond_ii.append(UncoveredPointReport(point=x, s=s, t=t, slack=slack))
    return GateauxEpsReport(eps=eps, cond_i=cond_i, cond_ii=tuple(cond_ii))

def coverage_eps_prefix(space: FiniteMetricSpace, system: MoleculeSystem, eps: Fraction) -> Optional[int]:
    """
    Function to find the shortest prefix of the pair list whose points already
    eps-cover the space with pairs (s, t) satisfying f(s) - f(t) > d(s, t) - eps
    :param space:
    :param system: pair order is the truncation order
    :param eps: positive rational
    :return: the prefix length, or None when the full list fails
    """
    _check_eps(eps)
    table = _attaining_table(space, system)
    partial = norming_builder_service.build_on_N(space, system, table)

    best: List[Optional[Fraction]] = [None] * space.size
    seen: List[int] = []
    for n, (x_n, y_n) in enumerate(system.pairs, start=1):
        fresh = [point for point in (x_n, y_n) if point not in seen]
        fresh = list(dict.fromkeys(fresh))
        for new_point in fresh:
            seen.append(new_point)
            for other in seen:
                if other == new_point:
                    continue
                for s, t in ((new_point, other), (other, new_point)):
                    for x in range(space.size):
                        slack = pair_slack(space, partial, s, t, x)
                        if best[x] is None or slack < best[x]:
                            best[x] = slack
        if all(slack is not None and slack < eps for slack in best):
            return n
    return None

def separating_eps(space: FiniteMetricSpace, system: MoleculeSystem, point: int) -> Optional[Fraction]:
    """
    Function to compute half the minimal slack of a point, an eps for which
    check_gateaux_eps lists the point under condition (ii)
    :param space:
    :param system:
    :param point:
    :return: None when the point is exactly covered
    """
    if not 0 <= point < space.size:
        raise InvalidArgumentError(f"{general_constants.DETAIL_INDEX_OUT_OF_RANGE} Got: {point}")
    _check_nonempty(system)
    table = _attaining_table(space, system)
    partial = norming_builder_service.build_on_N(space, system, table)
    slack, _, _ = _best_slack(space, partial, point)
    if slack == 0:
        return None
    return slack / 2

def orient(pairs: Sequence[Tuple[int, int]], pattern: Sequence[bool]) -> Tuple[Tuple[int, int], ...]:
    """Swap pair i to (y_i, x_i) where pattern[i] is True."""
    return tuple((y, x) if flipped else (x, y) for (x, y), flipped in zip(pairs, pattern))

def _check_pattern(
    space: FiniteMetricSpace,
    pairs: Tuple[Tuple[int, int], ...],
    pattern: Tuple[bool, ...],
) -> Optional[NegativeCycleWitness]:
    oriented = MoleculeSystem(pairs=orient(pairs, pattern), weights=(Fraction(1),) * len(pairs))
    beta = molecule_system_service.beta_matrix(space, oriented)
    return potential_engine_service.find_negative_cycle(beta.beta)

def orientation_patterns(size: int) -> Iterator[Tuple[bool, ...]]:
    """The 2^(size-1) patterns with the first pair kept, in lexicographic order."""
    for tail in product((False, True), repeat=size - 1):
        yield (False,) + tail

def l1_basis_check(
    space: FiniteMetricSpace,
    system: MoleculeSystem,
    max_pairs: Optional[int] = None,
    workers: Optional[int] = None,
) -> L1BasisVerdict:
    """
    Function to decide whether the molecules span an isometric copy of the l1
    basis: every orientation of the pairs must be cyclically monotone.
    Patterns run in batches over joblib workers; the lexicographically first
    failing pattern is reported whatever the completion order.
    :param space:
    :param system: only the pairs are read
    :param max_pairs: defaults to settings.L1_CHECK_MAX_PAIRS
    :param workers: defaults to settings.L1_CHECK_WORKERS
    :return:
    """
    max_pairs = settings.L1_CHECK_MAX_PAIRS if max_pairs is None else max_pairs
    workers = settings.L1_CHECK_WORKERS if workers is None else workers
    molecule_system_service.ensure_valid_system(space, system)
    size = len(system.pairs)
    if size > max_pairs:
        raise ResourceLimitError(f"l1-check supports at most {max_pairs} pairs, got {size}.")
    if size == 0:
        return L1BasisVerdict(isometric_l1=True)

    patterns = orientation_patterns(size)
    batch_size = PATTERN_BATCH_PER_WORKER * workers
    with Parallel(n_jobs=workers) as parallel:
        while True:
            batch = list(islice(patterns, batch_size))
            if not batch:
                break
            witnesses = parallel(
                delayed(_check_pattern)(space, system.pairs, pattern) for pattern in batch
            )
            for pattern, witness in zip(batch, witnesses):
                if witness is not None:
                    logger.info(f"l1_basis_check: orientation {pattern} fails")
                    return L1BasisVerdict(isometric_l1=False, pattern=pattern, witness=witness)
    return L1BasisVerdict(isometric_l1=True)

def _frechet_verdict(space: FiniteMetricSpace, system: MoleculeSystem) -> DiffVerdict:
    verdict = decide(space, system)
    if verdict.kind != differentiability_constants.VERDICT_FRECHET:
        raise InvalidArgumentError(general_constants.DETAIL_NOT_FRECHET, context=verdict)
    return verdict

def _bound(space: FiniteMetricSpace, system: MoleculeSystem) -> StabilityBound:
    theta, diameter = metric_core_service.separation(space)
    n = len(system.pairs)
    factor = Fraction(differentiability_constants.STABILITY_NUMERATOR) / theta + 1
    return StabilityBound(theta=theta, diameter=diameter, n=n, K=factor * n * n * diameter)

def stability_bound(space: FiniteMetricSpace, system: MoleculeSystem) -> StabilityBound:
    """
    Function to compute K = (4 / theta + 1) * n^2 * D at a Frechet point
    :param space:
    :param system:
    :return:
    """
    _frechet_verdict(space, system)
    return _bound(space, system)

def stability_report(
    space: FiniteMetricSpace,
    system: MoleculeSystem,
    g: LipschitzFunction,
    eps: Fraction,
) -> StabilityCheck:
    """
    Function to evaluate the stability implication for one competitor g:
    if g(mu) > 1 - eps / min(weights) then sup |f - g| <= K * eps
    :param space:
    :param system:
    :param g: 1-Lipschitz and vanishing at the base
    :param eps: positive rational
    :return:
    """
    _check_eps(eps)
    if len(g.values) != space.size:
        raise InvalidArgumentError(f"{general_constants.DETAIL_INDEX_OUT_OF_RANGE} Function size {len(g.values)}.")
    if g.values[space.base] != 0:
        raise InvalidArgumentError("The function must vanish at the base point.")
    if norming_builder_service.lipschitz_constant(space, g.values) > 1:
        raise InvalidArgumentError(general_constants.DETAIL_NOT_LIPSCHITZ)

    f = _frechet_verdict(space, system).norming
    bound = _bound(space, system)
    value = molecule_system_service.evaluate(space, system, g.values)
    threshold = 1 - eps / min(system.weights)
    hypothesis = value > threshold
    sup_distance = max(abs(a - b) for a, b in zip(f.values, g.values))
    holds = not hypothesis or sup_distance <= bound.K * eps
    if not holds:
        logger.warning(f"stability_report: sup distance {sup_distance} exceeds K * eps = {bound.K * eps}")
    return StabilityCheck(
        bound=bound,
        eps=eps,
        value=value,
        threshold=threshold,
        hypothesis=hypothesis,
        sup_distance=sup_distance,
        holds=holds,
    )

def verify_stability(
    space: FiniteMetricSpace,
    system: MoleculeSystem,
    g: LipschitzFunction,
    eps: Fraction,
) -> bool:
    """Whether the stability implication holds for g (vacuously when g(mu) <= threshold)."""
    return stability_report(space, system, g, eps).holds
