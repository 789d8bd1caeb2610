# Verdict Kinds
VERDICT_FRECHET = "Frechet"
VERDICT_NOT_GATEAUX = "NotGateaux"

# Failure Kinds
FAILURE_NOT_ATTAINING = "NotAttaining"
FAILURE_NON_UNIQUE_ON_N = "NonUniqueOnN"
FAILURE_UNCOVERED = "Uncovered"

# Stability constant K = (STABILITY_NUMERATOR / theta + 1) * n^2 * D
STABILITY_NUMERATOR = 4
