from fractions import Fraction

import pytest

from constants.tests.spaces import TRI_A, TRI_B, TRI_ORIGIN
from core.exceptions import InvalidArgumentError
from schemas import LipschitzFunction, NegativeCycleWitness, PartialFunction
from services import (
    generators_service,
    molecule_system_service,
    norming_builder_service,
    potential_engine_service,
)
from tests.fixtures import line_space, random_instances, system, to_base_system, tri_space

def _partial(space, molecules) -> PartialFunction:
    table = potential_engine_service.closure(molecule_system_service.beta_matrix(space, molecules))
    return norming_builder_service.build_on_N(space, molecules, table)

def test_build_on_N():
    """
    Function to test the assignment f(y_i) = alpha_i, f(x_i) = alpha_i + d(x_i, y_i)
    :return:
    """
    star = generators_service.gen_star(3)
    test_case_1 = _partial(star, system([(1, 0), (2, 0)], [Fraction(1, 2), Fraction(1, 2)]))
    assert test_case_1.values == {0: 0, 1: 1, 2: 1}, "Test case 1: star values."
    assert test_case_1.base_pinned, "Test case 1: base lies in N."

    tri = tri_space()
    test_case_2 = _partial(tri, system([(TRI_A, TRI_ORIGIN)], [1]))
    assert test_case_2.values == {TRI_ORIGIN: 0, TRI_A: 2}, "Test case 2: single pair."

    c0 = generators_service.gen_c0_truncation(4)
    test_case_3 = _partial(c0, to_base_system(4))
    expected = {0: 0, 1: 2, 2: Fraction(5, 4), 3: Fraction(9, 8), 4: Fraction(17, 16)}
    assert test_case_3.values == expected, "Test case 3: values must equal d(., 0)."

    test_case_4 = _partial(tri, system([(TRI_A, TRI_B)], [1]))
    assert test_case_4.values == {TRI_A: 2, TRI_B: 0} and not test_case_4.base_pinned, "Test case 4."

def test_extensions():
    """
    Function to test the upper and lower 1-Lipschitz extensions
    :return:
    """
    tri = tri_space()
    partial = PartialFunction(values={TRI_ORIGIN: Fraction(0), TRI_A: Fraction(2)})
    upper = norming_builder_service.extend_upper(tri, partial)
    lower = norming_builder_service.extend_lower(tri, partial)
    assert upper.values == (0, 2, 1), "Test case 1: g1(b) = min(0 + 1, 2 + 2)."
    assert lower.values == (0, 2, 0), "Test case 1: g2(b) = max(0 - 1, 2 - 2)."
    assert upper.lip_constant <= 1 and lower.lip_constant <= 1

    line = line_space()
    full = PartialFunction(values={0: Fraction(0), 1: Fraction(1), 2: Fraction(2)})
    assert norming_builder_service.extend_upper(line, full).values == (0, 1, 2), "Test case 2."
    assert norming_builder_service.extend_lower(line, full).values == (0, 1, 2), "Test case 2."

    with pytest.raises(InvalidArgumentError):
        norming_builder_service.extend_upper(tri, PartialFunction(values={TRI_ORIGIN: 0, TRI_A: 5}))
    with pytest.raises(InvalidArgumentError):
        norming_builder_service.extend_lower(tri, PartialFunction(values={}))

def test_verify_norming():
    star = generators_service.gen_star(4)
    ones = LipschitzFunction(values=(0, 1, 1, 1, 1), lip_constant=1)
    zeros = LipschitzFunction(values=(0, 0, 0, 0, 0), lip_constant=0)
    assert norming_builder_service.verify_norming(star, to_base_system(4), ones), "Test case 1."
    assert not norming_builder_service.verify_norming(star, to_base_system(4), zeros), "Test case 2."

    c0 = generators_service.gen_c0_truncation(5)
    to_base = tuple(c0.dist[x][0] for x in range(c0.size))
    f = LipschitzFunction(
        values=to_base, lip_constant=norming_builder_service.lipschitz_constant(c0, to_base)
    )
    assert f.lip_constant == 1, "d(., 0) is 1-Lipschitz."
    assert norming_builder_service.verify_norming(c0, to_base_system(5), f), "Test case 3."

def test_lipschitz_constant_and_shift():
    line = line_space()
    assert norming_builder_service.lipschitz_constant(line, (0, 2, 2)) == 2
    shifted = norming_builder_service.shift_to_base(
        line, LipschitzFunction(values=(3, 4, 5), lip_constant=1, base_pinned=False)
    )
    assert shifted.values == (0, 1, 2) and shifted.base_pinned

def test_norming_function():
    """
    Function to test that every cyclically monotone family gets a verified
    norming function and every other family a witness
    :return:
    """
    tri = tri_space()
    failing = norming_builder_service.norming_function(
        tri, system([(TRI_A, TRI_ORIGIN), (TRI_ORIGIN, TRI_B)], [Fraction(1, 2), Fraction(1, 2)])
    )
    assert isinstance(failing, NegativeCycleWitness)

    for space, molecules in random_instances(200, 500):
        result = norming_builder_service.norming_function(space, molecules)
        holds = potential_engine_service.check_cyclical_monotonicity(space, molecules).holds
        assert isinstance(result, NegativeCycleWitness) != holds
        if not holds:
            continue
        assert norming_builder_service.verify_norming(space, molecules, result)
        assert result.values[space.base] == 0
        partial = _partial(space, molecules)
        upper = norming_builder_service.extend_upper(space, partial)
        lower = norming_builder_service.extend_lower(space, partial)
        assert all(low <= high for low, high in zip(lower.values, upper.values))
        assert norming_builder_service.verify_norming(space, molecules, lower)
