from typing import Literal, Optional

from pydantic import BaseModel, Field

class GeneratorSpec(BaseModel):
    """
    Schema for a reproducible space construction request.
    `seed` and `profile` are only read by the random kind.
    """
    kind: Literal["star", "c0_truncation", "line", "random"]
    size: int = Field(ge=2)
    seed: Optional[int] = None
    profile: Literal["generic", "near-degenerate"] = "generic"

    class Config:
        frozen = True
