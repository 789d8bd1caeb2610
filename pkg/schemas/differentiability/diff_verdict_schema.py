from typing import Dict, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field
from typing_extensions import Annotated

from schemas.core.rational import Rational
from schemas.lipschitz.lipschitz_function_schema import LipschitzFunction
from schemas.potentials.potential_table_schema import NegativeCycleWitness

class NotAttainingFailure(BaseModel):
    """The family is not cyclically monotone, so the series is not on the sphere."""
    kind: Literal["NotAttaining"] = "NotAttaining"
    witness: NegativeCycleWitness

    class Config:
        frozen = True
        arbitrary_types_allowed = True

class NonUniqueOnNFailure(BaseModel):
    """
    The pair {j, k} is not rigid. `alphas_upper` and `alphas_lower` are two
    feasible potentials whose (j, k) differences are B[j][k] and -B[k][j].
    """
    kind: Literal["NonUniqueOnN"] = "NonUniqueOnN"
    pair: Tuple[int, int]
    rigidity_gap: Rational
    alphas_upper: Tuple[Rational, ...]
    alphas_lower: Tuple[Rational, ...]

    class Config:
        frozen = True
        arbitrary_types_allowed = True

class UncoveredFailure(BaseModel):
    """
    No segment [s, t] normed by f contains `point`; the largest and smallest
    1-Lipschitz extensions from N differ there.
    """
    kind: Literal["Uncovered"] = "Uncovered"
    point: int
    upper_value: Rational
    lower_value: Rational

    class Config:
        frozen = True
        arbitrary_types_allowed = True

DiffFailure = Annotated[
    Union[NotAttainingFailure, NonUniqueOnNFailure, UncoveredFailure],
    Field(discriminator="kind"),
]

class DiffVerdict(BaseModel):
    """Schema for the differentiability decision at a finite convex series."""
    kind: Literal["Frechet", "NotGateaux"]
    norming: Optional[LipschitzFunction] = None
    failure: Optional[DiffFailure] = None
    coverage: Optional[Dict[int, Tuple[int, int]]] = None

    class Config:
        frozen = True
        arbitrary_types_allowed = True

class StabilityBound(BaseModel):
    """Schema for K = (4/theta + 1) * n^2 * D."""
    theta: Rational
    diameter: Rational
    n: int
    K: Rational

    class Config:
        frozen = True
        arbitrary_types_allowed = True

class UncoveredPointReport(BaseModel):
    """
    A point failing the eps-coverage condition, with the pair (s, t) that comes
    closest and its slack: the least eps for which that pair would cover it.
    """
    point: int
    s: int
    t: int
    slack: Rational

    class Config:
        frozen = True
        arbitrary_types_allowed = True

class GateauxEpsReport(BaseModel):
    """Schema for the eps-approximate Gateaux conditions."""
    eps: Rational
    cond_i: Tuple[Tuple[int, int], ...] = ()
    cond_ii: Tuple[UncoveredPointReport, ...] = ()

    class Config:
        frozen = True
        arbitrary_types_allowed = True

class L1BasisVerdict(BaseModel):
    """
    Schema for the l1-basis check. `pattern[i]` is True when pair i is flipped
    to (y_i, x_i); present with `witness` only when the check fails.
    """
    isometric_l1: bool
    pattern: Optional[Tuple[bool, ...]] = None
    witness: Optional[NegativeCycleWitness] = None

    class Config:
        frozen = True
        arbitrary_types_allowed = True

class StabilityCheck(BaseModel):
    """
    Schema for one evaluation of the stability implication:
    g(mu) > threshold = 1 - eps / min(weights) must give sup |f - g| <= K * eps.
    """
    bound: StabilityBound
    eps: Rational
    value: Rational
    threshold: Rational
    hypothesis: bool
    sup_distance: Rational
    holds: bool

    class Config:
        frozen = True
        arbitrary_types_allowed = True
