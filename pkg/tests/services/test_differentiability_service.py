from fractions import Fraction

import numpy as np
import pytest
from joblib import parallel_config

from constants.services import differentiability as differentiability_constants
from constants.tests.spaces import TRI_A, TRI_B, TRI_ORIGIN
from core.exceptions import InvalidArgumentError, NotAttainingError, ResourceLimitError
from schemas import LipschitzFunction, NonUniqueOnNFailure, NotAttainingFailure, UncoveredFailure
from services import (
    certificate_service,
    differentiability_service,
    generators_service,
    molecule_system_service,
    norming_builder_service,
    potential_engine_service,
)
from services.oracles import brute_norming_uniqueness
from tests.fixtures import line_space, random_instances, system, to_base_system, tri_space

EPS_LADDER = [Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]
STABILITY_EPS = [Fraction(1, 2 ** power) for power in range(4, 11)]

def _uncovered_system():
    return system([(TRI_A, TRI_ORIGIN)], [1])

def _non_rigid_case():
    # 0 - 1 - 2 - 3 on the line, pairs (1, 0) and (3, 2): B[0][1] + B[1][0] = 2
    return generators_service.gen_line(4), system([(1, 0), (3, 2)], [Fraction(1, 2), Fraction(1, 2)])

def test_decide_fixtures():
    """
    Function to test the three verdict branches on hand-checked fixtures
    :return:
    """
    star = generators_service.gen_star(8)
    test_case_1 = differentiability_service.decide(star, to_base_system(8))
    assert test_case_1.kind == differentiability_constants.VERDICT_FRECHET, "Test case 1: star is Frechet."
    assert test_case_1.norming.values == (0,) + (1,) * 8, "Test case 1: norming is 1 off the base."
    assert test_case_1.coverage[0] == (0, 1), "Test case 1: first lexicographic pair covers the base."
    assert all(test_case_1.coverage[n] == (0, n) for n in range(1, 9)), "Test case 1: leaves covered by (0, n)."
    certificate_service.verify_verdict(star, to_base_system(8), test_case_1)

    tri = tri_space()
    test_case_2 = differentiability_service.decide(tri, _uncovered_system())
    assert test_case_2.kind == differentiability_constants.VERDICT_NOT_GATEAUX
    assert isinstance(test_case_2.failure, UncoveredFailure) and test_case_2.failure.point == TRI_B
    assert test_case_2.failure.upper_value - test_case_2.failure.lower_value == 1, "Test case 2: gap g1(b) - g2(b)."
    certificate_service.verify_verdict(tri, _uncovered_system(), test_case_2)

    c0 = generators_service.gen_c0_truncation(6)
    test_case_3 = differentiability_service.decide(c0, to_base_system(6))
    assert test_case_3.kind == differentiability_constants.VERDICT_FRECHET, "Test case 3: c0 truncation."
    assert test_case_3.norming.values == tuple(c0.dist[x][0] for x in range(c0.size)), "Test case 3: f = d(., 0)."

    line, molecules = _non_rigid_case()
    test_case_4 = differentiability_service.decide(line, molecules)
    assert isinstance(test_case_4.failure, NonUniqueOnNFailure), "Test case 4: non-rigid pair."
    assert test_case_4.failure.pair == (0, 1) and test_case_4.failure.rigidity_gap == 2
    certificate_service.verify_verdict(line, molecules, test_case_4)

    bad = system([(TRI_A, TRI_ORIGIN), (TRI_ORIGIN, TRI_B)], [Fraction(1, 2), Fraction(1, 2)])
    test_case_5 = differentiability_service.decide(tri, bad)
    assert isinstance(test_case_5.failure, NotAttainingFailure) and test_case_5.failure.witness.cycle == (0, 1)

    with pytest.raises(InvalidArgumentError):
        differentiability_service.decide(tri, system([(TRI_A, TRI_ORIGIN)], [2]))

    assert differentiability_service.decide(star, to_base_system(8)) == test_case_1, "decide must be pure."

def test_check_gateaux_eps():
    """
    Function to test both eps-conditions
    :return:
    """
    star = generators_service.gen_star(5)
    for eps in EPS_LADDER:
        report = differentiability_service.check_gateaux_eps(star, to_base_system(5), eps)
        assert report.cond_i == () and report.cond_ii == (), f"Frechet input fails at eps {eps}."

    tri = tri_space()
    test_case_2 = differentiability_service.check_gateaux_eps(tri, _uncovered_system(), Fraction(1, 2))
    assert [item.point for item in test_case_2.cond_ii] == [TRI_B], "Test case 2: b is not eps-covered."
    closest = test_case_2.cond_ii[0]
    assert (closest.s, closest.t, closest.slack) == (TRI_ORIGIN, TRI_A, 1), "Test case 2: closest pair."

    test_case_3 = differentiability_service.check_gateaux_eps(tri, _uncovered_system(), Fraction(2))
    assert test_case_3.cond_ii == (), "Test case 3: b lies in [0, a]_2."

    line, molecules = _non_rigid_case()
    test_case_4 = differentiability_service.check_gateaux_eps(line, molecules, Fraction(1))
    assert test_case_4.cond_i == ((0, 1),), "Test case 4: gap 2 is not below 1."
    assert differentiability_service.check_gateaux_eps(line, molecules, Fraction(3)).cond_i == ()

    bad = system([(TRI_A, TRI_ORIGIN), (TRI_ORIGIN, TRI_B)], [Fraction(1, 2), Fraction(1, 2)])
    with pytest.raises(NotAttainingError):
        differentiability_service.check_gateaux_eps(tri, bad, Fraction(1))
    with pytest.raises(InvalidArgumentError):
        differentiability_service.check_gateaux_eps(tri, _uncovered_system(), Fraction(0))

def test_coverage_eps_prefix():
    star = generators_service.gen_star(5)
    assert differentiability_service.coverage_eps_prefix(star, to_base_system(5), Fraction(1, 2)) == 5
    assert differentiability_service.coverage_eps_prefix(star, to_base_system(5), Fraction(5)) == 1

    c0 = generators_service.gen_c0_truncation(4)
    assert differentiability_service.coverage_eps_prefix(c0, to_base_system(4), Fraction(1)) == 1
    assert differentiability_service.coverage_eps_prefix(c0, to_base_system(4), Fraction(1, 2)) == 2

    tri = tri_space()
    assert differentiability_service.coverage_eps_prefix(tri, _uncovered_system(), Fraction(1, 2)) is None

def test_separating_eps():
    tri = tri_space()
    assert differentiability_service.separating_eps(tri, _uncovered_system(), TRI_B) == Fraction(1, 2)
    assert differentiability_service.separating_eps(tri, _uncovered_system(), TRI_A) is None
    with pytest.raises(InvalidArgumentError):
        differentiability_service.separating_eps(tri, _uncovered_system(), 9)

def test_empty_system_is_rejected():
    """
    Function to test that the eps-conditions refuse a family with no pairs
    :return:
    """
    tri = tri_space()
    empty = system([], [])
    with pytest.raises(InvalidArgumentError, match="at least one pair"):
        differentiability_service.check_gateaux_eps(tri, empty, Fraction(1))
    with pytest.raises(InvalidArgumentError, match="at least one pair"):
        differentiability_service.separating_eps(tri, empty, TRI_A)
    assert differentiability_service.coverage_eps_prefix(tri, empty, Fraction(1)) is None

def test_l1_basis_check():
    """
    Function to test the orientation search for an isometric l1 basis
    :return:
    """
    star = generators_service.gen_star(8)
    star_pairs = system([(n, 0) for n in range(1, 9)], [1] * 8)
    assert differentiability_service.l1_basis_check(star, star_pairs).isometric_l1, "Test case 1: star."

    line = line_space()
    line_pairs = system([(1, 0), (2, 0)], [1, 1])
    test_case_2 = differentiability_service.l1_basis_check(line, line_pairs)
    assert not test_case_2.isometric_l1, "Test case 2: the line is not an l1 basis."
    assert test_case_2.pattern == (False, True), "Test case 2: first failing orientation."
    assert differentiability_service.orient(line_pairs.pairs, test_case_2.pattern) == ((1, 0), (0, 2))
    assert test_case_2.witness.cycle == (0, 1) and test_case_2.witness.cycle_sum == -2
    certificate_service.verify_l1(line, line_pairs, test_case_2)

    assert differentiability_service.l1_basis_check(line, system([(1, 0)], [1])).isometric_l1, "Test case 3."

    with pytest.raises(ResourceLimitError):
        differentiability_service.l1_basis_check(star, star_pairs, max_pairs=4)

    with parallel_config(backend="threading"):
        parallel = differentiability_service.l1_basis_check(line, line_pairs, workers=2)
    assert parallel == test_case_2, "Worker count must not change the verdict."

def test_orientation_patterns():
    patterns = list(differentiability_service.orientation_patterns(3))
    assert len(patterns) == 4 and all(pattern[0] is False for pattern in patterns)
    assert patterns == sorted(patterns)

def test_l1_basis_check_symmetry():
    """
    Function to test invariance under flipping every pair and permuting the list
    :return:
    """
    rng = np.random.default_rng(5)
    for space, molecules in random_instances(60, 700, max_pairs=4):
        verdict = differentiability_service.l1_basis_check(space, molecules).isometric_l1
        flipped = system([(y, x) for x, y in molecules.pairs], molecules.weights)
        order = [int(i) for i in rng.permutation(len(molecules.pairs))]
        permuted = system([molecules.pairs[i] for i in order], [molecules.weights[i] for i in order])
        assert differentiability_service.l1_basis_check(space, flipped).isometric_l1 == verdict
        assert differentiability_service.l1_basis_check(space, permuted).isometric_l1 == verdict

def test_stability_bound_and_report():
    """
    Function to test K = (4 / theta + 1) * n^2 * D and the report fields
    :return:
    """
    star = generators_service.gen_star(3)
    molecules = to_base_system(3)
    bound = differentiability_service.stability_bound(star, molecules)
    assert (bound.theta, bound.diameter, bound.n, bound.K) == (1, 2, 3, 90), "Test case 1: K = 5 * 9 * 2."

    f = differentiability_service.decide(star, molecules).norming
    same = differentiability_service.stability_report(star, molecules, f, Fraction(1, 16))
    assert same.hypothesis and same.holds and same.sup_distance == 0, "Test case 2: g = f."
    assert differentiability_service.verify_stability(star, molecules, f, Fraction(1, 16))

    zero = LipschitzFunction(values=(0, 0, 0, 0), lip_constant=0)
    vacuous = differentiability_service.stability_report(star, molecules, zero, Fraction(1, 16))
    assert not vacuous.hypothesis and vacuous.holds, "Test case 3: implication holds vacuously."

    tri = tri_space()
    with pytest.raises(InvalidArgumentError):
        differentiability_service.stability_bound(tri, _uncovered_system())
    steep = LipschitzFunction(values=(0, 3, 3, 3), lip_constant=3)
    with pytest.raises(InvalidArgumentError):
        differentiability_service.stability_report(star, molecules, steep, Fraction(1, 16))
    shifted = LipschitzFunction(values=(1, 1, 1, 1), lip_constant=0)
    with pytest.raises(InvalidArgumentError):
        differentiability_service.stability_report(star, molecules, shifted, Fraction(1, 16))

def test_stability_sampling():
    """
    Function to sample nearly norming functions around Frechet points and check
    that none leaves the K * eps ball
    :return:
    """
    rng = np.random.default_rng(2024)
    fixtures = [
        (generators_service.gen_star(3), to_base_system(3)),
        (generators_service.gen_c0_truncation(4), to_base_system(4)),
    ]
    samples = 0
    for space, molecules in fixtures:
        f = differentiability_service.decide(space, molecules).norming
        for eps in STABILITY_EPS:
            for _ in range(72):
                t = eps * Fraction(int(rng.integers(0, 65)), 64)
                g = generators_service.gen_lipschitz_perturbation(space, f, t, int(rng.integers(0, 2 ** 31)))
                check = differentiability_service.stability_report(space, molecules, g, eps)
                assert check.hypothesis, "Perturbations this small stay above the threshold."
                assert check.holds, f"sup |f - g| = {check.sup_distance} exceeds K * eps at eps {eps}."
                samples += 1
    assert samples >= 1000

def test_decide_against_norming_uniqueness():
    """
    Function to test Frechet against uniqueness of the norming dual vertex,
    and against the rigidity plus equal-extension route
    :return:
    """
    for space, molecules in random_instances(500, 4000, max_pairs=4):
        verdict = differentiability_service.decide(space, molecules)
        certificate_service.verify_verdict(space, molecules, verdict)
        frechet = verdict.kind == differentiability_constants.VERDICT_FRECHET
        assert frechet == brute_norming_uniqueness(space, molecules), "Frechet iff unique norming function."

        table = potential_engine_service.closure(molecule_system_service.beta_matrix(space, molecules))
        if isinstance(verdict.failure, NotAttainingFailure):
            continue
        partial = norming_builder_service.build_on_N(space, molecules, table)
        extensions_agree = (
            norming_builder_service.extend_upper(space, partial).values
            == norming_builder_service.extend_lower(space, partial).values
        )
        assert frechet == (table.globally_unique and extensions_agree)

        if frechet:
            for eps in EPS_LADDER:
                report = differentiability_service.check_gateaux_eps(space, molecules, eps)
                assert report.cond_i == () and report.cond_ii == ()
        elif isinstance(verdict.failure, UncoveredFailure):
            point = verdict.failure.point
            eps = differentiability_service.separating_eps(space, molecules, point)
            assert eps is not None and eps > 0
            report = differentiability_service.check_gateaux_eps(space, molecules, eps)
            assert point in [item.point for item in report.cond_ii]
