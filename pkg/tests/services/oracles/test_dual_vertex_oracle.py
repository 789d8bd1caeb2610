from fractions import Fraction
from itertools import product

import pytest

from constants.tests.oracles import ASSERTED_TRI_DUAL_VERTICES
from constants.tests.spaces import TRI_A, TRI_B, TRI_ORIGIN
from core.exceptions import ResourceLimitError
from schemas import PointMassElement
from services import generators_service, metric_core_service
from services.oracles import brute_dual_norm, brute_norming_uniqueness, enumerate_dual_vertices
from tests.fixtures import system, to_base_system, tri_space

def test_enumerate_dual_vertices():
    """
    Function to test vertex enumeration of the dual unit ball
    :return:
    """
    tri = tri_space()
    assert set(enumerate_dual_vertices(tri)) == ASSERTED_TRI_DUAL_VERTICES, "Test case 1: hexagon."

    line = generators_service.gen_line(2)
    assert set(enumerate_dual_vertices(line)) == {(0, 1), (0, -1)}, "Test case 2: segment."

    single = metric_core_service.build_space(["0"], [[0]], "0")
    assert enumerate_dual_vertices(single) == frozenset({(0,)}), "Test case 3: single point."

    with pytest.raises(ResourceLimitError):
        enumerate_dual_vertices(generators_service.gen_star(5), max_points=5)

def test_enumerate_dual_vertices_on_six_points():
    """
    Function to test enumeration at the point cap: the star ball is the cube
    [-1, 1]^5 and a second call reuses the cached vertex set
    :return:
    """
    star = generators_service.gen_star(5)
    test_case_1 = enumerate_dual_vertices(star)
    assert test_case_1 == frozenset(product((0,), *[(1, -1)] * 5)), "Test case 1: 32 cube corners."
    assert enumerate_dual_vertices(generators_service.gen_star(5)) is test_case_1, "Test case 1: cached per space."

    line = generators_service.gen_line(3)
    assert set(enumerate_dual_vertices(line)) == {(0, 1, 2), (0, 1, 0), (0, -1, 0), (0, -1, -2)}, "Test case 2."

    c0 = generators_service.gen_c0_truncation(5)
    vertices = enumerate_dual_vertices(c0)
    assert tuple(c0.dist[x][0] for x in range(c0.size)) in vertices, "Test case 3: d(., 0) is a vertex."
    assert all(vertex[c0.base] == 0 for vertex in vertices)

def test_brute_dual_norm():
    tri = tri_space()
    element = PointMassElement(coefficients={TRI_A: Fraction(1, 4), TRI_B: Fraction(-1, 2)})
    assert brute_dual_norm(tri, element) == Fraction(3, 4)
    assert brute_dual_norm(tri, PointMassElement(coefficients={TRI_B: Fraction(-3)})) == 3

def test_brute_norming_uniqueness():
    tri = tri_space()
    assert not brute_norming_uniqueness(tri, system([(TRI_A, TRI_ORIGIN)], [1])), "f(b) is free in [0, 1]."
    assert brute_norming_uniqueness(generators_service.gen_star(3), to_base_system(3))
    failing = system([(TRI_A, TRI_ORIGIN), (TRI_ORIGIN, TRI_B)], [Fraction(1, 2), Fraction(1, 2)])
    assert not brute_norming_uniqueness(tri, failing), "No vertex reaches 1."
