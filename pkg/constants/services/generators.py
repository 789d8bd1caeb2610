# Generator Kinds
GENERATOR_C0_TRUNCATION = "c0_truncation"
GENERATOR_LINE = "line"
GENERATOR_RANDOM = "random"
GENERATOR_STAR = "star"

# Random Profiles
PROFILE_GENERIC = "generic"
PROFILE_NEAR_DEGENERATE = "near-degenerate"

BASE_LABEL = "0"
C0_POINT_PREFIX = "x"

# Random metric draws: distances lie in [1/q, RANDOM_MAX_NUMERATOR_FACTOR] before repair
RANDOM_MAX_NUMERATOR_FACTOR = 4
# Fraction of non-tree edges added by the near-degenerate profile
NEAR_DEGENERATE_EXTRA_EDGE_RATE = 3
