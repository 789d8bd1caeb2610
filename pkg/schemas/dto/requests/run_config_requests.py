from typing import Optional

from pydantic import BaseModel

from schemas.core.rational import Rational

class RunConfig(BaseModel):
    """
    Schema for one CLI invocation after option parsing
    """
    command: str
    space_path: Optional[str] = None
    system_path: Optional[str] = None
    element_path: Optional[str] = None
    function_path: Optional[str] = None
    eps: Optional[Rational] = None
    oracle: bool = False
    output_format: str = "json"

    class Config:
        frozen = True
        arbitrary_types_allowed = True
