from hecke.eigen.reduction import (
    NO_WITNESS,
    ReductionTarget,
    ReductionWitness,
    WitnessSearch,
    default_labels,
    reduce_space,
    reduce_to_one_dim,
)
from hecke.eigen.report import EigenReport, ReportEntry, eigensystems, occurs_in, system_matches

__all__ = [
    "NO_WITNESS",
    "ReductionTarget",
    "ReductionWitness",
    "WitnessSearch",
    "default_labels",
    "reduce_space",
    "reduce_to_one_dim",
    "EigenReport",
    "ReportEntry",
    "eigensystems",
    "occurs_in",
    "system_matches",
]
