from hecke.exact.fields import (
    QQ_FIELD,
    ExtensionField,
    Field,
    GFElement,
    PrimeField,
    RationalField,
    common_field,
    extension_degree_for,
    field_embeddings,
    field_from_name,
    finite_field,
    multiplicative_order,
)
from hecke.exact.hnf import gcdex, hnf, is_hnf
from hecke.exact.poly import char_poly, factor, min_poly

__all__ = [
    "QQ_FIELD",
    "ExtensionField",
    "Field",
    "GFElement",
    "PrimeField",
    "RationalField",
    "common_field",
    "extension_degree_for",
    "field_embeddings",
    "field_from_name",
    "finite_field",
    "multiplicative_order",
    "gcdex",
    "hnf",
    "is_hnf",
    "char_poly",
    "factor",
    "min_poly",
]
