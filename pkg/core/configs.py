import os
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import validator
from pydantic_settings import BaseSettings

dotenv_path = os.path.join(os.path.abspath(os.path.dirname(os.path.dirname(__file__))), ".env")
if os.path.exists(dotenv_path):
    load_dotenv(dotenv_path)

class Settings(BaseSettings):
    """
    A class to Declare and use Configurations in this App
    """
    # App Config
    APP_NAME: str = "lipfree"

    # Instance size caps
    MAX_POINTS: int = 512
    VIOLATION_REPORT_LIMIT: int = 100
    L1_CHECK_MAX_PAIRS: int = 20
    L1_CHECK_WORKERS: int = 1

    # Oracle caps
    ORACLE_MAX_POINTS: int = 6
    ORACLE_MAX_CYCLE_SIZE: int = 8

    # Generators
    RANDOM_MAX_DENOMINATOR: int = 64

    # Logging
    LOG_DIR: Optional[str] = None
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: Literal["text", "json"] = "text"

    @validator("LOG_LEVEL", pre=True)
    def normalize_log_level(cls, v: str) -> str:
        """
        Function to accept lower-case level names from the environment
        """
        if isinstance(v, str):
            return v.strip().upper()
        raise ValueError(v)

    @validator(
        "MAX_POINTS",
        "VIOLATION_REPORT_LIMIT",
        "L1_CHECK_MAX_PAIRS",
        "L1_CHECK_WORKERS",
        "ORACLE_MAX_POINTS",
        "ORACLE_MAX_CYCLE_SIZE",
        "RANDOM_MAX_DENOMINATOR",
    )
    def check_positive(cls, v: int) -> int:
        """
        Function to reject non-positive caps
        """
        if v < 1:
            raise ValueError(f"must be positive, got {v}")
        return v

    class Config:
        """ Additional config """
        case_sensitive = True
        env_prefix = "LIPFREE_"

settings = Settings()
