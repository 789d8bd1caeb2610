COMMAND_ATTAINS = "attains"
COMMAND_COVERAGE_PREFIX = "coverage-prefix"
COMMAND_DECIDE = "decide"
COMMAND_DECOMPOSE = "decompose"
COMMAND_GATEAUX_EPS = "gateaux-eps"
COMMAND_GEN = "gen"
COMMAND_L1_CHECK = "l1-check"
COMMAND_NORM = "norm"
COMMAND_NORMING = "norming"
COMMAND_POTENTIALS = "potentials"
COMMAND_STABILITY = "stability"
COMMAND_VALIDATE = "validate"

OUTPUT_FORMAT_JSON = "json"
OUTPUT_FORMAT_TEXT = "text"
