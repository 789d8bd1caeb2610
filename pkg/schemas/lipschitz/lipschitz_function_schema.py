from typing import Dict, Tuple

from pydantic import BaseModel

from schemas.core.rational import Rational

class LipschitzFunction(BaseModel):
    """
    Schema for an exact function on every point of a space with its exact
    Lipschitz constant. `base_pinned` is False when the additive constant
    is not fixed by the data, in which case values[base] may be nonzero.
    """
    values: Tuple[Rational, ...]
    lip_constant: Rational
    base_pinned: bool = True

    class Config:
        frozen = True
        arbitrary_types_allowed = True

class PartialFunction(BaseModel):
    """Schema for a function defined on the point set N of a molecule family."""
    values: Dict[int, Rational]
    base_pinned: bool = False

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @property
    def domain(self) -> Tuple[int, ...]:
        return tuple(sorted(self.values))
