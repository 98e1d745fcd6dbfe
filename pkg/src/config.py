"""
Configuration — Lines on Hypersurfaces
--------------------------------------

Single source of truth for:
- Capacity caps of the enumeration-based methods
- Verification ranges and tolerances
- Worker count for parallel verification
- Output locations

All other modules import from here.
"""

import logging
import os
from pathlib import Path

from dotenv import load_dotenv


logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------
# Project paths
# ---------------------------------------------------------------------
PROJECT_ROOT = Path(__file__).resolve().parents[1]
REPORTS_PATH = PROJECT_ROOT / "reports"


# ---------------------------------------------------------------------
# Capacity caps
# ---------------------------------------------------------------------
# bombieri : composition enumeration visits C(2n-4, n-2) masks
#            (about 2.7M at n = 14)
# oracle   : Leibniz expansion of a (2n-2)x(2n-2) symbolic matrix

BOMBIERI_MAX_N = 14
ORACLE_MAX_N   = 5

# Largest n for which the weighted length sum is also enumerated
# profile by profile (exponential in h).
BOMBIERI_ENUMERATION_MAX_N = 9


# ---------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------
VERIFY_DEFAULT_MAX      = 12
ASYMPTOTIC_SLACK        = 1e-9
SEQUENCE_DEFAULT_METHOD = "schubert"


# ---------------------------------------------------------------------
# Workers
# ---------------------------------------------------------------------
# FANO_THREADS may come from the shell or from a .env file at the
# project root. Absent -> serial (joblib n_jobs=1).

THREADS_ENV_VAR = "FANO_THREADS"
DEFAULT_WORKERS = 1


def resolve_workers() -> int:
    """
    Return the joblib worker count for parallel sections.

    Reads FANO_THREADS after loading .env. Non-integer or non-positive
    values are ignored with a [WARN] and the default is used instead.
    """
    load_dotenv(PROJECT_ROOT / ".env")
    raw = os.getenv(THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_WORKERS

    try:
        workers = int(raw)
    except ValueError:
        logger.warning(f"[WARN] Ignoring {THREADS_ENV_VAR}={raw!r}: not an integer")
        return DEFAULT_WORKERS

    if workers < 1:
        logger.warning(f"[WARN] Ignoring {THREADS_ENV_VAR}={workers}: must be >= 1")
        return DEFAULT_WORKERS

    return workers
