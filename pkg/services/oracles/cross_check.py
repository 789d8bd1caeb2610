"""
Agreement checks between the decision procedures and the brute-force oracles.
Each check returns ORACLE_AGREE or raises CertificateMismatchError.
"""
from fractions import Fraction

from constants import general as general_constants
from constants.services import differentiability as differentiability_constants
from constants.services import oracles as oracle_constants
from core.exceptions import CertificateMismatchError
from core.logger import logger
from core.utilities import new_request_id
from schemas import (
    ClosureResult,
    DiffVerdict,
    FiniteMetricSpace,
    MoleculeSystem,
    NegativeCycleWitness,
    PointMassElement,
)
from services import molecule_system_service
from services.oracles.cycle_oracle import brute_cycles, brute_path_minimum
from services.oracles.dual_vertex_oracle import brute_dual_norm, brute_norming_uniqueness


def _disagree(check: str, reason: str) -> None:
    req_id = new_request_id()
    logger.error(f"{check}: {req_id} {reason}")
    raise CertificateMismatchError(f"{general_constants.DETAIL_ORACLE_DISAGREEMENT} {reason} ({req_id})")

def cross_check_norm(space: FiniteMetricSpace, element: PointMassElement, value: Fraction) -> str:
    expected = brute_dual_norm(space, element)
    if expected != value:
        _disagree("cross_check_norm", f"transport value {value}, dual vertices {expected}")
    return oracle_constants.ORACLE_AGREE

def cross_check_attains(space: FiniteMetricSpace, system: MoleculeSystem, attains: bool) -> str:
    """
    Function to compare an attainment verdict with exhaustive cycle enumeration
    :param space:
    :param system:
    :param attains:
    :return:
    """
    beta = molecule_system_service.beta_matrix(space, system).beta
    brute_attains = brute_cycles(beta).min_sum >= 0
    if brute_attains != attains:
        _disagree("cross_check_attains", f"attains {attains}, cycle enumeration {brute_attains}")
    return oracle_constants.ORACLE_AGREE

def cross_check_closure(space: FiniteMetricSpace, system: MoleculeSystem, result: ClosureResult) -> str:
    """
    Function to compare the closure with simple-path minima, or a reported
    cycle with the minimal cycle sum
    :param space:
    :param system:
    :param result:
    :return:
    """
    beta = molecule_system_service.beta_matrix(space, system).beta
    if isinstance(result, NegativeCycleWitness):
        minimum = brute_cycles(beta).min_sum
        if minimum >= 0:
            _disagree("cross_check_closure", f"cycle sum {result.cycle_sum} but no negative cycle exists")
        return oracle_constants.ORACLE_AGREE
    for j in range(len(beta)):
        for k in range(len(beta)):
            expected = brute_path_minimum(beta, j, k)
            if result.closure[j][k] != expected:
                _disagree("cross_check_closure", f"B[{j}][{k}] = {result.closure[j][k]}, path minimum {expected}")
    return oracle_constants.ORACLE_AGREE

def cross_check_verdict(space: FiniteMetricSpace, system: MoleculeSystem, verdict: DiffVerdict) -> str:
    """
    Function to compare a differentiability verdict with the count of
    norming dual vertices: Frechet exactly when the norming function is unique
    :param space:
    :param system:
    :param verdict:
    :return:
    """
    unique = brute_norming_uniqueness(space, system)
    frechet = verdict.kind == differentiability_constants.VERDICT_FRECHET
    if unique != frechet:
        _disagree("cross_check_verdict", f"verdict {verdict.kind}, unique norming function {unique}")
    return oracle_constants.ORACLE_AGREE
