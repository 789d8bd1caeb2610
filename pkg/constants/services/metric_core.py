# Validation Violation Kinds
VIOLATION_ASYMMETRY = "asymmetry"
VIOLATION_DUPLICATE_LABEL = "dup-label"
VIOLATION_NEGATIVE = "negative"
VIOLATION_TRIANGLE = "triangle"
VIOLATION_ZERO_OFFDIAG = "zero-offdiag"
VIOLATION_NONZERO_DIAGONAL = "nonzero-diag"
