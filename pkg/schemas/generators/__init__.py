from schemas.generators.generator_spec_schema import *
