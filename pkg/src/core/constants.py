"""
Central constants and default values for the LDSC system.

Single Responsibility: Define system-wide constants ONLY
- Versions pinned into every container (scheme, format)
- Defaults for codebook construction and experiments
- Limits guarding exact arithmetic and exhaustive sweeps

Usage:
    from src.core.constants import SCHEME_VERSION, K_MAX_FLOOR

    def default_k_max(upper_bound):
        return max(K_MAX_FLOOR, K_MAX_MULTIPLIER * math.ceil(upper_bound))
"""

# ==============================================================================
# VERSIONING
# ==============================================================================

SCHEME_VERSION = 1
"""Version of the keyed PRF + Floyd sampler. Changing either bumps this."""

SUPPORTED_SCHEME_VERSIONS = frozenset({SCHEME_VERSION})
"""Scheme versions this build can rebuild codebooks for."""

FORMAT_VERSION = 1
"""Container layout version."""

CONTAINER_MAGIC = b"SLDC"
"""First four bytes of every serialized codeword."""


# ==============================================================================
# CODEBOOK DEFAULTS
# ==============================================================================

DEFAULT_MASTER_SEED = 0
"""Master seed used when the caller does not provide one."""

K_MAX_FLOOR = 64
"""Smallest default search cap (bits)."""

K_MAX_MULTIPLIER = 8
"""Default search cap is this multiple of the ceiled non-adaptive upper bound."""

MASK_64 = (1 << 64) - 1
"""Mask for 64-bit unsigned arithmetic."""


# ==============================================================================
# BOUND CONSTANTS
# ==============================================================================

ACHIEVABILITY_CONSTANT = 30.0
"""Leading constant of the non-adaptive upper bound."""

EXACT_BIT_LIMIT = 10_000
"""C(n,r) beyond this many bits is not handled with exact partial sums."""

LYM_MAX_LEVELS = 1_000_000
"""Iteration cap for the exact M(n,r,d) partial-sum search."""

ENSEMBLE_SURVIVAL_TOL = 1e-12
"""Survival probability below which the ensemble sum switches to its tail bound."""

ENSEMBLE_MAX_LEVELS = 1_000_000
"""Iteration cap for the ensemble length bound."""

CAPACITY_RELATIVE_SLACK = 1e-9
"""Relative slack granted to the exact left side in the capacity-sum check."""


# ==============================================================================
# EXPERIMENT CONSTANTS
# ==============================================================================

EXHAUSTIVE_GUARD = 1_000_000
"""Largest C(n,r) an exhaustive sweep will enumerate."""

CI_CONFIDENCE = 0.95
"""Two-sided confidence level of reported intervals (normal approximation)."""

SANDWICH_SIGMAS = 3.0
"""Slack, in standard errors, used by the bound sandwich checks."""

DEFAULT_TRIALS = 10_000
"""Monte Carlo trials when none are requested."""

MIN_SCALING_POINTS = 4
"""A log-log regression needs at least this many grid points."""


# ==============================================================================
# CONFIGURATION / ENVIRONMENT
# ==============================================================================

ENV_PREFIX = "LDSC_"
"""Environment variables with this prefix feed the user configuration."""

DEFAULT_LOG_LEVEL = "INFO"
"""Log level when none is configured."""

DEFAULT_OUTPUT_DIR = "outputs"
"""Directory for report files when --out is a bare file name."""

REPORT_FORMATS = ("json", "csv", "xlsx")
"""Report formats understood by the exporter."""
