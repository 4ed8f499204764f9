from hecke.modgroup.coset_table import CosetTable
from hecke.modgroup.gmat import GMat
from hecke.modgroup.groups import GroupDescriptor, SemigroupDescriptor
from hecke.modgroup.presentation import AmbientPresentation, Presentation, SubgroupPresentation
from hecke.modgroup.words import I2, J, S, T, U, evaluate_word, word_decompose, word_to_str

__all__ = [
    "CosetTable",
    "GMat",
    "GroupDescriptor",
    "SemigroupDescriptor",
    "AmbientPresentation",
    "Presentation",
    "SubgroupPresentation",
    "I2",
    "J",
    "S",
    "T",
    "U",
    "evaluate_word",
    "word_decompose",
    "word_to_str",
]
