from schemas.lipschitz.lipschitz_function_schema import *
