"""Constants and enums for Hecke computations"""

import logging
import os
from enum import Enum


# Engine configuration constants
DEFAULT_SEED = int(os.environ.get("HECKE_ENGINE_SEED", "20240611"))
MAX_WORKERS = int(os.environ.get("HECKE_ENGINE_JOBS", "1"))
DEFAULT_STORAGE = os.environ.get("HECKE_ENGINE_STORAGE", "memory")
DEFAULT_LABEL_PRIMES = [
    int(p) for p in os.environ.get("HECKE_ENGINE_LABELS", "2,3,7").split(",") if p.strip()
]
FULL_TESTS = os.environ.get("HECKE_ENGINE_FULL_TESTS", "0") == "1"

# Desk-scale limits
MAX_FINITE_GROUP_ORDER = 10**6
MAX_IRREDUCIBILITY_DEGREE = 30
MEATAXE_ATTEMPTS = 200


class SignPolicy(str, Enum):
    SL = "SL"  # det = +1 only
    GL = "GL"  # det = +1 or -1


class GroupKind(str, Enum):
    GAMMA0 = "gamma0"  # upper triangular mod N
    GAMMA1_UPPER = "gamma1_upper"  # (1 *; 0 *) mod N
    GAMMA_DIAG = "gamma_diag"  # diag(1, *) mod N
    FULL = "full"  # level 1
    CUSTOM = "custom"  # generators given explicitly


class ModuleKind(str, Enum):
    SYM = "sym"  # Sym^k tensor det^e, direct substitution action
    ADMISSIBLE = "admissible"  # acts through (sign, reduction mod N)
    INDUCED = "induced"


class CohomPath(str, Enum):
    AMBIENT = "ambient"  # H^i(G, Ind) at SL2(Z) or GL2(Z)
    DIRECT = "direct"  # Reidemeister-Schreier presentation of the subgroup


class ReductionMode(str, Enum):
    CHAR0 = "char0"  # target gamma_diag(N), characters mod N
    CHARL = "charl"  # target gamma1_upper(N * L), characters mod L


class JobStatus(str, Enum):
    CREATED = "created"  # Job is recorded but not yet started
    RUNNING = "running"  # Job is currently executing
    FINISHED = "finished"  # Job completed and emitted its records
    FAILED = "failed"  # Job raised and emitted an error record


# Exit codes surfaced by the CLI
EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_MATH_DOMAIN = 3


# Configure logging
logging.basicConfig(
    level=os.environ.get("HECKE_ENGINE_LOG_LEVEL", "INFO").upper(),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger("hecke-engine")
