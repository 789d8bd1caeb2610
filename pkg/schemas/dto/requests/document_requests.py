from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from schemas.core.rational import Rational

class SpaceDocument(BaseModel):
    """
    Schema for a space document:
    {"labels": [...], "base": "0", "dist": [[...]]}
    """
    labels: List[str]
    base: str
    dist: List[List[Rational]]

    class Config:
        arbitrary_types_allowed = True

class SystemDocument(BaseModel):
    """
    Schema for a molecule system document, labels resolved against a space:
    {"pairs": [["a", "0"], ...], "weights": ["1/2", ...]}
    """
    pairs: List[Tuple[str, str]]
    weights: List[Rational]

    class Config:
        arbitrary_types_allowed = True

class ElementDocument(BaseModel):
    """Schema for a finitely supported element: {"coeffs": {"a": "1/4", ...}}"""
    coeffs: Dict[str, Rational] = {}

    class Config:
        arbitrary_types_allowed = True

class LipschitzFunctionDocument(BaseModel):
    """
    Schema for a function document: {"values": {"a": "1/2", ...}, "lip": "1"}.
    Missing labels take value 0; `lip` is recomputed, never trusted.
    """
    values: Dict[str, Rational] = {}
    lip: Optional[Rational] = None

    class Config:
        arbitrary_types_allowed = True
