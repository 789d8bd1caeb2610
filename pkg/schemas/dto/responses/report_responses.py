from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from schemas.core.rational import Rational

# Reports name points by label and molecule pairs by 1-based position in the system document.

class ErrorResponse(BaseModel):
    """Schema for the error object printed on standard error"""
    error: str
    detail: str

class ViolationResponse(BaseModel):
    """Schema for one metric axiom violation"""
    kind: str
    labels: List[str]

class ValidationResponse(BaseModel):
    """Schema for the validate command"""
    ok: bool
    points: int
    violations: List[ViolationResponse] = []
    truncated: bool = False
    theta: Optional[Rational] = None
    diameter: Rational

    class Config:
        arbitrary_types_allowed = True

class LipschitzFunctionResponse(BaseModel):
    """Schema for a function keyed by point label"""
    values: Dict[str, Rational]
    lip: Rational
    base_pinned: bool = True

    class Config:
        arbitrary_types_allowed = True

class NegativeCycleResponse(BaseModel):
    """
    Schema for a negative beta-cycle with the violated cyclical monotonicity
    inequality spelled out in distances
    """
    cycle: List[int]
    cycle_sum: Rational
    inequality: str

    class Config:
        arbitrary_types_allowed = True

class TransportResponse(BaseModel):
    """Schema for the norm command"""
    value: Rational
    plan: List[Tuple[str, str, Rational]] = []
    dual: LipschitzFunctionResponse
    oracle: Optional[str] = None

    class Config:
        arbitrary_types_allowed = True

class AttainsResponse(BaseModel):
    """Schema for the attains command"""
    attains: bool
    total_weight: Rational
    norm: Rational
    witness: Optional[NegativeCycleResponse] = None
    oracle: Optional[str] = None

    class Config:
        arbitrary_types_allowed = True

class DecomposeResponse(BaseModel):
    """Schema for the decompose command: a system document plus its totals"""
    pairs: List[Tuple[str, str]] = []
    weights: List[Rational] = []
    total_weight: Rational
    norm: Rational

    class Config:
        arbitrary_types_allowed = True

class PotentialsResponse(BaseModel):
    """Schema for the potentials command"""
    holds: bool
    closure: Optional[List[List[Rational]]] = None
    alphas: Optional[List[Rational]] = None
    anchor: Optional[int] = None
    globally_unique: Optional[bool] = None
    rigid_pairs: Optional[List[Tuple[int, int]]] = None
    witness: Optional[NegativeCycleResponse] = None
    oracle: Optional[str] = None

    class Config:
        arbitrary_types_allowed = True

class NormingResponse(BaseModel):
    """Schema for the norming command"""
    norming: Optional[LipschitzFunctionResponse] = None
    verified: bool = False
    witness: Optional[NegativeCycleResponse] = None

    class Config:
        arbitrary_types_allowed = True

class FailureResponse(BaseModel):
    """Schema for a NotGateaux failure, fields populated per kind"""
    kind: str
    witness: Optional[NegativeCycleResponse] = None
    pair: Optional[Tuple[int, int]] = None
    rigidity_gap: Optional[Rational] = None
    point: Optional[str] = None
    upper_value: Optional[Rational] = None
    lower_value: Optional[Rational] = None

    class Config:
        arbitrary_types_allowed = True

class DecideResponse(BaseModel):
    """Schema for the decide command"""
    kind: str
    norming: Optional[LipschitzFunctionResponse] = None
    failure: Optional[FailureResponse] = None
    coverage: Optional[Dict[str, Tuple[str, str]]] = None
    oracle: Optional[str] = None

class UncoveredPointResponse(BaseModel):
    """Schema for a point failing eps-coverage"""
    point: str
    s: str
    t: str
    slack: Rational

    class Config:
        arbitrary_types_allowed = True

class GateauxEpsResponse(BaseModel):
    """Schema for the gateaux-eps command"""
    eps: Rational
    cond_i: List[Tuple[int, int]] = []
    cond_ii: List[UncoveredPointResponse] = []

    class Config:
        arbitrary_types_allowed = True

class CoveragePrefixResponse(BaseModel):
    """Schema for the coverage-prefix command"""
    eps: Rational
    pairs: int
    prefix: Optional[int] = None

    class Config:
        arbitrary_types_allowed = True

class L1CheckResponse(BaseModel):
    """Schema for the l1-check command; `pattern` lists the oriented pairs"""
    isometric_l1: bool
    pattern: Optional[List[Tuple[str, str]]] = None
    witness: Optional[NegativeCycleResponse] = None

class StabilityResponse(BaseModel):
    """Schema for the stability command"""
    theta: Rational
    diameter: Rational
    n: int
    K: Rational
    eps: Rational
    value: Rational
    threshold: Rational
    hypothesis: bool
    sup_distance: Rational
    holds: bool

    class Config:
        arbitrary_types_allowed = True
