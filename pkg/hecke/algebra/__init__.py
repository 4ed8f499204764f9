from hecke.algebra.compat import check_compatible
from hecke.algebra.cosets import (
    DoubleCosetSum,
    coset_key,
    compose,
    decompose,
    degree_formula,
    elementary_divisor_types,
    hecke_ta,
    hecke_tp,
    identity_sum,
    series_check,
)
from hecke.algebra.grading import (
    ClassCharacter,
    EigenSystem,
    OperatorLabel,
    SyntheticClassGroup,
    extract_twist,
    restrict_to_gamma,
    twist_eigensystem,
)

__all__ = [
    "check_compatible",
    "DoubleCosetSum",
    "coset_key",
    "compose",
    "decompose",
    "degree_formula",
    "elementary_divisor_types",
    "hecke_ta",
    "hecke_tp",
    "identity_sum",
    "series_check",
    "ClassCharacter",
    "EigenSystem",
    "OperatorLabel",
    "SyntheticClassGroup",
    "extract_twist",
    "restrict_to_gamma",
    "twist_eigensystem",
]
