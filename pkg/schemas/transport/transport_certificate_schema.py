from typing import Tuple

from pydantic import BaseModel

from schemas.core.rational import Rational
from schemas.lipschitz.lipschitz_function_schema import LipschitzFunction

class PlanLeg(BaseModel):
    """Schema for mass shipped from a source point to a sink point."""
    source: int
    sink: int
    mass: Rational

    class Config:
        frozen = True
        arbitrary_types_allowed = True

class TransportCertificate(BaseModel):
    """
    Schema for the free-space norm with its primal plan and its dual
    1-Lipschitz function; both evaluate to `value`.
    """
    value: Rational
    plan: Tuple[PlanLeg, ...] = ()
    dual: LipschitzFunction

    class Config:
        frozen = True
        arbitrary_types_allowed = True
