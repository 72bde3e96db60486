"""
Default iwasawa settings. Override these with settings in the module pointed
to by the IWASAWA_SETTINGS_MODULE environment variable.
"""
from pathlib import Path

# ---------------------------------------------------------------------------- #
#                                  TOLERANCES                                  #
# ---------------------------------------------------------------------------- #

# Skew-Hermitian check: ||m + m^H|| <= SKEW_TOLERANCE * max(1, ||m||)
SKEW_TOLERANCE = 1e-12

# |Im Tr(nm)| above this (scaled by max(1, |n||m|)) means corrupted inputs
IMAGINARY_RESIDUE_TOLERANCE = 1e-13

# A trailing minor below tol * ||H||^k makes the orbit label degenerate
DEGENERACY_TOLERANCE = 1e-10

# ||i s*s - m|| <= tol * max(1, ||m||) after factoring an orbit point
FACTOR_RESIDUAL_TOLERANCE = 1e-10

# Unit sphere directions must have |omega| = 1 within this tolerance
SPHERE_TOLERANCE = 1e-12

# max |c - 1| below this makes T_a(s0) unitary
UNITARITY_TOLERANCE = 1e-10

# T_a(s0) counts as bounded when max c over the sample directions stays below
BOUNDEDNESS_LIMIT = 1e8

# ---------------------------------------------------------------------------- #
#                                  QUADRATURE                                  #
# ---------------------------------------------------------------------------- #

QUADRATURE = {
    "SPHERE_SAMPLES": 4096,
    # Adaptive Gauss-Kronrod rule used along the radius
    "RADIAL_EPSABS": 1e-10,
    "RADIAL_EPSREL": 1e-9,
    "RADIAL_LIMIT": 2000,
    # Radial integrals run over [DELTA_MIN, R_MAX / decay rate]
    "DELTA_MIN": 1e-12,
    "R_MAX": 60.0,
    "SEED": 20150914,
    # Samples per random substream. Changing it changes the sample set.
    "BLOCK_SIZE": 1024,
}

# Default truncation grid delta = 2**-k, k = 4..20
DIVERGENCE_GRID_EXPONENTS = (4, 20)

# ---------------------------------------------------------------------------- #
#                                   VERDICTS                                   #
# ---------------------------------------------------------------------------- #

VERDICT = {
    "IDENTITY_RESIDUAL": 1e-9,
    "AGREEMENT_SIGMAS": 4.0,
    "FIT_R_SQUARED": 0.99,
    "F0_FIT_R_SQUARED": 0.999,
    "F0_SLOPE_RTOL": 0.03,
    "SLOPE_ATOL": 1e-6,
    "MIN_CONCLUSIVE_SAMPLES": 200,
    "INCONCLUSIVE_RELATIVE_ERROR": 0.25,
    "PROBE_POINTS": 50,
}

# Thresholds of the verify-group property suites (relative residuals)
VERIFY = {
    "GROUP_LAW": 1e-12,
    "THETA": 1e-12,
    "JACOBIAN": 1e-8,
    "PAIRING": 1e-12,
    "HOMOMORPHISM": 1e-10,
    "TRIALS": 100,
}

# ---------------------------------------------------------------------------- #
#                                   EXECUTION                                  #
# ---------------------------------------------------------------------------- #

# Worker threads for Monte Carlo blocks. None means one per CPU. The
# IWASAWA_THREADS environment variable takes precedence. Results never
# depend on this value.
THREADS = None

# JSON schema every RunConfig is validated against
RUNCONFIG_SCHEMA = str(
    Path(__file__).resolve().parents[1] / "schema" / "runconfig.json"
)

# ---------------------------------------------------------------------------- #
#                                    LOGGING                                   #
# ---------------------------------------------------------------------------- #

# The callable to use to configure logging
LOGGING_CONFIG = "logging.config.dictConfig"

# Custom logging configuration.
LOGGING = {}
