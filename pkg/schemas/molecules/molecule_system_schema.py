from fractions import Fraction
from typing import Dict, Tuple

from pydantic import BaseModel, computed_field, model_validator

from schemas.core.rational import Rational

class MoleculeSystem(BaseModel):
    """
    Schema for a weighted molecule family sum_i weights[i] * m_{x_i, y_i}.
    Pair order is significant: it is the truncation order of coverage prefixes.
    """
    pairs: Tuple[Tuple[int, int], ...]
    weights: Tuple[Rational, ...]

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @model_validator(mode="after")
    def check_weights(self) -> "MoleculeSystem":
        if len(self.pairs) != len(self.weights):
            raise ValueError("pairs and weights must have the same length")
        for index, weight in enumerate(self.weights):
            if weight <= 0:
                raise ValueError(f"weight {index} is not strictly positive")
        return self

    @computed_field
    @property
    def normalized(self) -> bool:
        return sum(self.weights) == 1

    @property
    def total_weight(self) -> Fraction:
        return sum(self.weights, Fraction(0))

class BetaMatrix(BaseModel):
    """Schema for beta[j][k] = d(x_j, y_k) - d(x_j, y_j)."""
    beta: Tuple[Tuple[Rational, ...], ...]

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @property
    def size(self) -> int:
        return len(self.beta)

class PointMassElement(BaseModel):
    """
    Schema for a finitely supported element sum_p coefficients[p] * delta_p.
    The base point never appears (delta_0 = 0) and zero coefficients are dropped.
    """
    coefficients: Dict[int, Rational] = {}

    class Config:
        frozen = True
        arbitrary_types_allowed = True
