from hecke.cohom.action import (
    HeckeMatrix,
    coboundaries_preserved,
    conjugation_square,
    conjugation_transport,
    hecke_action,
    hecke_matrix,
    hecke_operator,
    shapiro,
)
from hecke.cohom.graded import GradedFamily
from hecke.cohom.space import CohomSpace, cohomology, h0, h1

__all__ = [
    "HeckeMatrix",
    "coboundaries_preserved",
    "conjugation_square",
    "conjugation_transport",
    "hecke_action",
    "hecke_matrix",
    "hecke_operator",
    "shapiro",
    "GradedFamily",
    "CohomSpace",
    "cohomology",
    "h0",
    "h1",
]
