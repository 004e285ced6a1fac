# Constants for the dual symmetric inverse monoid toolkit

# Enumeration defaults
DEFAULT_TC_MAX_CLASSES = 100000
DEFAULT_FP_MAX_ELEMENTS = 100000

# Todd-Coxeter: lookahead is attempted once live classes reach this share of the cap
LOOKAHEAD_TRIGGER = 0.5

# Smallest degrees accepted by the generator images and presentations
MIN_DEGREE_X = 3
MIN_DEGREE_EPSILON = 2
MIN_DEGREE_F = 2
MIN_DEGREE_LOCAL = 4

# Degree limits for the exhaustive suites
MAX_ORACLE_DEGREE = 6
MAX_PROP_DEGREE = 5
MAX_PROPERTY_P_DEGREE = 4
MAX_SYMMETRIC_DEGREE = 5
MAX_SYMMETRIC_LENGTH = 8
DEFAULT_SYMMETRIC_LENGTH = 6
MAX_EXHAUSTIVE_INVERSE_DEGREE = 4

# Letter names. Shortlex order: x (or t) first, then s_1 < s_2 < ...
LETTER_X = "x"
LETTER_T = "t"
LETTER_S = "s"
EMPTY_WORD_TOKEN = "1"

# Text grammar separators
BLOCK_SEPARATOR = "|"
ROW_SEPARATOR = ";"
POINT_SEPARATOR = ","

# Report verdicts
VERDICT_PASS = "PASS"
VERDICT_FAIL = "FAIL"

# Error messages
ERROR_OVERLAP = "Blocks overlap"
ERROR_GAP = "Blocks do not cover every point"
ERROR_OUT_OF_RANGE = "Point out of range"
ERROR_SIZE_MISMATCH = "Size mismatch"
ERROR_ROW_MISSING = "Block misses a row"
ERROR_NOT_UNIT = "Conjugator is not a unit"
ERROR_NOT_LOCAL = "Element is not in the local submonoid of epsilon"
ERROR_INVALID_LITERAL = "Invalid block-bijection literal"
ERROR_INVALID_WORD = "Invalid word"

# Verification suites accepted by the CLI
VERIFY_SUITES = (
    "relations",
    "presentation",
    "tables",
    "local",
    "normal-forms",
    "inverse",
    "properties",
    "all",
)

# Largest monoid for which a full multiplication table is materialized
MULTIPLICATION_TABLE_LIMIT = 2000

# Generator sets accepted by enumerate
GENERATOR_SETS = ("xs", "f", "s")
