from fractions import Fraction

import pytest

from constants.tests.spaces import BAD_TRIANGLE_DIST, BASE_LABEL, TRI_A, TRI_B, TRI_DIST, TRI_LABELS, TRI_ORIGIN
from core.exceptions import InvalidArgumentError, ParseError, ResourceLimitError
from schemas import ElementDocument, LipschitzFunctionDocument, SpaceDocument, SystemDocument
from services import document_service, generators_service
from tests.fixtures import system, tri_space

TRI_DOCUMENT = SpaceDocument(labels=TRI_LABELS, base=BASE_LABEL, dist=TRI_DIST)

def test_validate_and_resolve_space():
    """
    Function to test space documents against the point cap and the metric axioms
    :return:
    """
    assert document_service.validate_document(TRI_DOCUMENT).ok, "Test case 1: valid document."
    assert document_service.resolve_space(TRI_DOCUMENT) == tri_space(), "Test case 1: same space."

    broken = SpaceDocument(labels=TRI_LABELS, base=BASE_LABEL, dist=BAD_TRIANGLE_DIST)
    assert not document_service.validate_document(broken).ok, "Test case 2: violations reported."
    with pytest.raises(InvalidArgumentError):
        document_service.resolve_space(broken)

    with pytest.raises(ResourceLimitError):
        document_service.validate_document(TRI_DOCUMENT, max_points=2)
    with pytest.raises(ResourceLimitError):
        document_service.resolve_space(TRI_DOCUMENT, max_points=2)

def test_resolve_system():
    tri = tri_space()
    document = SystemDocument(pairs=[("a", "0"), ("0", "b")], weights=["1/2", "1/2"])
    assert document_service.resolve_system(tri, document) == system(
        [(TRI_A, TRI_ORIGIN), (TRI_ORIGIN, TRI_B)], [Fraction(1, 2), Fraction(1, 2)]
    )

    with pytest.raises(ParseError):
        document_service.resolve_system(tri, SystemDocument(pairs=[("a", "c")], weights=[1]))
    with pytest.raises(ParseError):
        document_service.resolve_system(tri, SystemDocument(pairs=[("a", "0")], weights=[1, 1]))
    with pytest.raises(ParseError):
        document_service.resolve_system(tri, SystemDocument(pairs=[("a", "0")], weights=["-1/2"]))
    with pytest.raises(InvalidArgumentError):
        document_service.resolve_system(tri, SystemDocument(pairs=[("a", "a")], weights=[1]))

def test_resolve_element_and_function():
    """
    Function to test that base and zero coefficients are dropped and that
    function values default to 0 with a recomputed Lipschitz constant
    :return:
    """
    tri = tri_space()
    element = document_service.resolve_element(tri, ElementDocument(coeffs={"b": "-1/2", "0": 3, "a": "1/4"}))
    assert element.coefficients == {TRI_A: Fraction(1, 4), TRI_B: Fraction(-1, 2)}
    assert list(element.coefficients) == [TRI_A, TRI_B], "Coefficients are ordered by point."
    assert document_service.resolve_element(tri, ElementDocument(coeffs={"a": 0})).coefficients == {}

    f = document_service.resolve_function(tri, LipschitzFunctionDocument(values={"a": 2}, lip="7"))
    assert f.values == (0, 2, 0) and f.lip_constant == 1 and f.base_pinned
    shifted = document_service.resolve_function(tri, LipschitzFunctionDocument(values={"0": 1, "a": 3, "b": 2}))
    assert not shifted.base_pinned
    with pytest.raises(ParseError):
        document_service.resolve_function(tri, LipschitzFunctionDocument(values={"z": 1}))

def test_to_documents():
    star = generators_service.gen_star(2)
    document = document_service.space_to_document(star)
    assert document.labels == ["0", "1", "2"] and document.base == "0"
    assert document_service.resolve_space(document) == star

    tri = tri_space()
    molecules = system([(TRI_A, TRI_ORIGIN)], [Fraction(1, 3)])
    assert document_service.system_to_document(tri, molecules) == SystemDocument(
        pairs=[("a", "0")], weights=["1/3"]
    )
    assert document_service.label_pair(tri, (TRI_B, TRI_A)) == ("b", "a")
