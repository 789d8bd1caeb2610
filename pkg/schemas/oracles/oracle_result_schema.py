from typing import Optional, Tuple

from pydantic import BaseModel

from schemas.core.rational import Rational

class CycleOracleResult(BaseModel):
    """
    Schema for exhaustive simple-cycle enumeration: the minimum beta-sum and
    one cycle attaining it, smallest index first. Length-1 cycles count, so
    the minimum never exceeds zero.
    """
    min_sum: Rational
    cycle: Optional[Tuple[int, ...]] = None

    class Config:
        frozen = True
        arbitrary_types_allowed = True
