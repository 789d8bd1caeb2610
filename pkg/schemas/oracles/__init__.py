from schemas.oracles.oracle_result_schema import *
