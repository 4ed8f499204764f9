from hecke.coeffmod.characters import Character, all_characters, character_field, unit_generators
from hecke.coeffmod.induced import FiniteInducedModel, InducedModule, finite_induction, induce
from hecke.coeffmod.meataxe import Constituent, constituents, hom_space, is_irreducible, is_semisimple
from hecke.coeffmod.modules import (
    AdmissibleModule,
    CharacterModule,
    CoefficientModule,
    SymPowerModule,
    TwistedModule,
    check_action_law,
    sym_power_matrix,
    trivial_module,
    twist_module,
)

__all__ = [
    "Character",
    "all_characters",
    "character_field",
    "unit_generators",
    "FiniteInducedModel",
    "InducedModule",
    "finite_induction",
    "induce",
    "Constituent",
    "constituents",
    "hom_space",
    "is_irreducible",
    "is_semisimple",
    "AdmissibleModule",
    "CharacterModule",
    "CoefficientModule",
    "SymPowerModule",
    "TwistedModule",
    "check_action_law",
    "sym_power_matrix",
    "trivial_module",
    "twist_module",
]
