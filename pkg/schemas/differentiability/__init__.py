from schemas.differentiability.diff_verdict_schema import *
