from typing import Optional, Tuple

from pydantic import BaseModel

from schemas.core.rational import Rational

class FiniteMetricSpace(BaseModel):
    """
    Schema for a finite pointed metric space with exact rational distances.
    Construct through `metric_core_service.build_space` unless the data is
    valid by construction (generators).
    """
    labels: Tuple[str, ...]
    base: int
    dist: Tuple[Tuple[Rational, ...], ...]

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @property
    def size(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> Optional[int]:
        """
        Function to resolve a label to its point index
        :param label:
        :return: the index, or None for an unknown label
        """
        try:
            return self.labels.index(label)
        except ValueError:
            return None

class Violation(BaseModel):
    """Schema for one failed metric axiom."""
    kind: str
    indices: Tuple[int, ...]

    class Config:
        frozen = True

class ValidationReport(BaseModel):
    """Schema for the outcome of validate_space."""
    ok: bool
    violations: Tuple[Violation, ...] = ()
    truncated: bool = False
    theta: Optional[Rational] = None
    diameter: Rational

    class Config:
        frozen = True
        arbitrary_types_allowed = True
