from fractions import Fraction
from typing import List

import numpy as np
import pytest

from constants.tests.spaces import TRI_A, TRI_B, TRI_ORIGIN
from core.exceptions import InvalidArgumentError
from schemas import BetaMatrix, NegativeCycleWitness, PotentialTable
from services import generators_service, molecule_system_service, potential_engine_service
from services.oracles import brute_cycles, brute_path_minimum
from tests.fixtures import random_instances, system, to_base_system, tri_space

def _beta(rows) -> BetaMatrix:
    return BetaMatrix(beta=tuple(tuple(Fraction(value) for value in row) for row in rows))

def _random_beta(rng: np.random.Generator, size: int) -> List[List[Fraction]]:
    return [
        [
            Fraction(0) if j == k else Fraction(int(rng.integers(-2, 7)), int(rng.integers(1, 4)))
            for k in range(size)
        ]
        for j in range(size)
    ]

def test_closure_examples():
    """
    Function to test closure on the zero matrix, a negative 2-cycle and a slack pair
    :return:
    """
    test_case_1 = potential_engine_service.closure(_beta([[0, 0, 0], [0, 0, 0], [0, 0, 0]]))
    assert isinstance(test_case_1, PotentialTable), "Test case 1: zero beta has no negative cycle."
    assert all(value == 0 for row in test_case_1.closure for value in row), "Test case 1: B must be 0."
    assert test_case_1.alphas == (0, 0, 0) and test_case_1.globally_unique, "Test case 1."

    test_case_2 = potential_engine_service.closure(_beta([[0, 0], [-1, 0]]))
    assert isinstance(test_case_2, NegativeCycleWitness), "Test case 2: negative cycle missed."
    assert test_case_2.cycle == (0, 1) and test_case_2.cycle_sum == -1, "Test case 2: wrong witness."

    test_case_3 = potential_engine_service.closure(_beta([[0, 1], [1, 0]]), anchor=1)
    assert isinstance(test_case_3, PotentialTable)
    assert test_case_3.closure == ((0, 1), (1, 0)), "Test case 3: B equals beta."
    assert test_case_3.alphas == (1, 0), "Test case 3: alphas anchored at the second pair."
    assert not test_case_3.globally_unique and test_case_3.rigid_pairs == ()
    assert test_case_3.rigidity_gap(0, 1) == 2

    with pytest.raises(InvalidArgumentError):
        potential_engine_service.closure(_beta([[1, 0], [0, 0]]))
    with pytest.raises(InvalidArgumentError):
        potential_engine_service.closure(_beta([[0, 0], [0]]))
    with pytest.raises(InvalidArgumentError):
        potential_engine_service.closure(_beta([[0, 1], [1, 0]]), anchor=2)

def test_rigid_chain():
    """
    Function to test zero-sum chains between rigid pairs
    :return:
    """
    zero = potential_engine_service.closure(_beta([[0, 0, 0], [0, 0, 0], [0, 0, 0]]))
    assert potential_engine_service.rigid_chain(zero, 0, 2) == (0, 2), "Test case 1: direct zero cycle."

    slack = potential_engine_service.closure(_beta([[0, 1], [1, 0]]))
    assert potential_engine_service.rigid_chain(slack, 0, 1) is None, "Test case 2: pair is not rigid."

    star = generators_service.gen_star(3)
    table = potential_engine_service.closure(molecule_system_service.beta_matrix(star, to_base_system(3)))
    chain = potential_engine_service.rigid_chain(table, 0, 2)
    assert chain == (0, 2) and potential_engine_service.cycle_sum(table.beta, chain) == 0, "Test case 3."

    with pytest.raises(InvalidArgumentError):
        potential_engine_service.rigid_chain(table, 1, 1)

def test_check_cyclical_monotonicity():
    tri = tri_space()
    assert potential_engine_service.check_cyclical_monotonicity(tri, system([(TRI_A, TRI_ORIGIN)], [1])).holds

    failing = potential_engine_service.check_cyclical_monotonicity(
        tri, system([(TRI_A, TRI_ORIGIN), (TRI_ORIGIN, TRI_B)], [Fraction(1, 2), Fraction(1, 2)])
    )
    assert not failing.holds and failing.witness.cycle == (0, 1), "The (a,0),(0,b) family fails."

    star = generators_service.gen_star(5)
    for subset in ([1], [2, 4], [1, 2, 3, 4, 5]):
        star_system = system([(n, 0) for n in subset], [1] * len(subset))
        assert potential_engine_service.check_cyclical_monotonicity(star, star_system).holds

def test_eps_rigid_and_extreme_potentials():
    slack = potential_engine_service.closure(_beta([[0, 1], [1, 0]]))
    assert not potential_engine_service.eps_rigid(slack, 0, 1, Fraction(2)), "Strict inequality."
    assert potential_engine_service.eps_rigid(slack, 0, 1, Fraction(5, 2))
    with pytest.raises(InvalidArgumentError):
        potential_engine_service.eps_rigid(slack, 0, 1, Fraction(0))

    upper, lower = potential_engine_service.extreme_potentials(slack, 0, 1)
    assert upper[0] - upper[1] == 1 and lower[0] - lower[1] == -1
    assert potential_engine_service.is_feasible(slack.beta, upper)
    assert potential_engine_service.is_feasible(slack.beta, lower)

def test_closure_against_enumeration():
    """
    Function to test closure, feasibility and duality bounds against
    exhaustive path and cycle enumeration on random matrices
    :return:
    """
    rng = np.random.default_rng(7)
    for _ in range(300):
        size = int(rng.integers(1, 6))
        beta = _random_beta(rng, size)
        result = potential_engine_service.closure(_beta(beta))
        brute = brute_cycles(beta)
        if isinstance(result, NegativeCycleWitness):
            assert brute.min_sum < 0, "Closure reported a cycle enumeration does not find."
            assert potential_engine_service.cycle_sum(beta, result.cycle) == result.cycle_sum < 0
            assert len(set(result.cycle)) == len(result.cycle) and result.cycle[0] == min(result.cycle)
            continue
        assert brute.min_sum >= 0, "Closure missed a negative cycle."
        assert potential_engine_service.is_feasible(beta, result.alphas), "Infeasible potentials."
        assert result.alphas[result.anchor] == 0
        for j in range(size):
            for k in range(size):
                assert result.closure[j][k] == brute_path_minimum(beta, j, k)
                assert result.closure[j][k] <= beta[j][k]
                assert -result.closure[k][j] <= result.alphas[j] - result.alphas[k] <= result.closure[j][k]
        if result.globally_unique:
            lower = [-result.closure[0][j] for j in range(size)]
            shifts = {result.alphas[j] - lower[j] for j in range(size)}
            assert len(shifts) == 1, "Anchored solutions must differ by a constant."

def test_monotonicity_against_cycle_oracle():
    for space, molecules in random_instances(200, 300):
        verdict = potential_engine_service.check_cyclical_monotonicity(space, molecules)
        beta = molecule_system_service.beta_matrix(space, molecules).beta
        assert verdict.holds == (brute_cycles(beta).min_sum >= 0)
