from typing import Optional, Tuple, Union

from pydantic import BaseModel

from schemas.core.rational import Rational

class NegativeCycleWitness(BaseModel):
    """
    Schema for a simple cycle of pair indices whose beta-sum
    beta[i_1][i_2] + ... + beta[i_m][i_1] is negative.
    The smallest index leads the cycle.
    """
    cycle: Tuple[int, ...]
    cycle_sum: Rational

    class Config:
        frozen = True
        arbitrary_types_allowed = True

class PotentialTable(BaseModel):
    """
    Schema for the shortest beta-path closure B and one anchored potential
    solution alphas[j] = B[j][anchor] of alpha_k <= alpha_j + beta[k][j].
    """
    beta: Tuple[Tuple[Rational, ...], ...]
    closure: Tuple[Tuple[Rational, ...], ...]
    successor: Tuple[Tuple[int, ...], ...]
    alphas: Tuple[Rational, ...]
    anchor: int
    globally_unique: bool
    rigid_pairs: Tuple[Tuple[int, int], ...]

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @property
    def size(self) -> int:
        return len(self.closure)

    def rigidity_gap(self, j: int, k: int):
        """B[j][k] + B[k][j]; zero exactly for rigid pairs."""
        return self.closure[j][k] + self.closure[k][j]

ClosureResult = Union[PotentialTable, NegativeCycleWitness]

class MonotonicityVerdict(BaseModel):
    """Schema for the cyclical monotonicity check: `witness` is set exactly when it fails."""
    holds: bool
    witness: Optional[NegativeCycleWitness] = None

    class Config:
        frozen = True
        arbitrary_types_allowed = True
