# CLI Exit Code
EXIT_CODE_SUCCESS = 0
EXIT_CODE_NEGATIVE_VERDICT = 1
EXIT_CODE_INPUT_ERROR = 2
EXIT_CODE_CERTIFICATE_MISMATCH = 3

# Error Kinds
ERROR_KIND_PARSE = "parse-error"
ERROR_KIND_INVALID_ARGUMENT = "invalid-argument"
ERROR_KIND_RESOURCE_LIMIT = "resource-limit"
ERROR_KIND_NOT_ATTAINING = "not-attaining"
ERROR_KIND_CERTIFICATE_MISMATCH = "certificate-mismatch"
ERROR_KIND_INTERNAL_CONSISTENCY = "internal-consistency"

# Error Details
DETAIL_BASE_LABEL_UNKNOWN = "The base label is not one of the space labels."
DETAIL_CERTIFICATE_MISMATCH = "A certificate failed its independent re-verification."
DETAIL_DIAGONAL_NONZERO = "The beta matrix must have a zero diagonal."
DETAIL_DUPLICATE_LABELS = "Labels must be pairwise distinct."
DETAIL_EPS_NOT_POSITIVE = "eps must be a positive rational."
DETAIL_EQUAL_ENDPOINTS = "Segment endpoints must be distinct points."
DETAIL_INDEX_OUT_OF_RANGE = "Point index out of range."
DETAIL_LABEL_UNKNOWN = "Unknown point label."
DETAIL_MATRIX_NOT_SQUARE = "The matrix must be square and match the label list."
DETAIL_NOT_FRECHET = "The element is not a point of Frechet differentiability."
DETAIL_NOT_LIPSCHITZ = "The function is not 1-Lipschitz on its domain."
DETAIL_NOT_NORMALIZED = "The molecule weights must sum to exactly 1."
DETAIL_NOT_RATIONAL = "Expected an integer or a \"p/q\" rational string."
DETAIL_PAIR_DEGENERATE = "A molecule pair must join two distinct points."
DETAIL_PAIRS_WEIGHTS_LENGTH = "pairs and weights must have the same length."
DETAIL_SPACE_INVALID = "The distance matrix is not a metric."
DETAIL_SPACE_TOO_SMALL = "The space needs at least two points."
DETAIL_SYSTEM_EMPTY = "The molecule system needs at least one pair."
DETAIL_WEIGHT_NOT_POSITIVE = "Molecule weights must be strictly positive."
DETAIL_ORACLE_DISAGREEMENT = "The brute-force oracle disagrees with the decision procedure."
DETAIL_UNEXPECTED_ERROR = "Unexpected internal error."
