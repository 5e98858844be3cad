"""Constants for the library."""
from typing import Final

FORMAT_VERSION: Final = 1

# max-abs entrywise tolerance for algebraic identities
ALGEBRA_TOLERANCE: Final = 1e-9
# identities that went through a matrix square root
SQRT_TOLERANCE: Final = 1e-8
# squared-norm distance from 1 for a ket to count as normalized
NORMALIZATION_TOLERANCE: Final = 1e-12
# states read from files are rounded decimals
STATE_INPUT_TOLERANCE: Final = 1e-9
BRANCH_PRUNING_THRESHOLD: Final = 1e-12
NORM_DRIFT_TOLERANCE: Final = 1e-10
FIDELITY_TOLERANCE: Final = 1e-9

MAX_SYSTEM_DIMENSION: Final = 32
MAX_QUBIT_EQUIVALENTS: Final = 20
# nesting levels of a parsed proposition, brackets counted separately
MAX_PROPOSITION_DEPTH: Final = 100

Z_SCORE_LIMIT: Final = 5.0
CHI_SQUARE_P_MIN: Final = 1e-3
# bins with a smaller expected count are pooled before a chi-square test
CHI_SQUARE_MIN_EXPECTED: Final = 5.0

DEFAULT_SHOTS: Final = 10_000
DEFAULT_RESTART_TRIALS: Final = 1000
FALLBACK_MAX_ATTEMPTS: Final = 10_000

# the coherent AND succeeds with amplitude 1/sqrt(3)
AND_SUCCESS_WEIGHT: Final = 1.0 / 3.0

READOUT_SLOT: Final = "readout"
PARITY_SLOT_PREFIX: Final = "parity"
AND_SLOT_PREFIX: Final = "and"
