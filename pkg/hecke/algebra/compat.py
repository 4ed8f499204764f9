"""Compatibility of Hecke pairs, verified on their images in {+1, -1} x GL2(Z/L)"""

from math import lcm
from typing import Set, Tuple

from hecke.constants import logger
from hecke.errors import MathDomainError
from hecke.finite_groups import ModMat, det_mod, mat_mul_mod
from hecke.modgroup.groups import GroupDescriptor

SignedImage = Set[Tuple[int, ModMat]]


def common_level(a: GroupDescriptor, b: GroupDescriptor) -> int:
    if a.level % b.level and b.level % a.level:
        raise MathDomainError("incompatible levels")
    return lcm(a.level, b.level)


def group_image(group: GroupDescriptor) -> SignedImage:
    """pi(Gamma): pairs (sign, h) with h in H and det h = sign mod N"""
    N = group.level
    return {(s, h) for h in group.H for s in group.allowed_signs if det_mod(h, N) == s % N}


def semigroup_image(group: GroupDescriptor) -> SignedImage:
    """pi(Delta_H): pairs (sign, h) with h in H and any allowed sign"""
    return {(s, h) for h in group.H for s in group.allowed_signs}


def _product(N: int, left: SignedImage, right: SignedImage) -> SignedImage:
    """left * right for a subgroup ``right``, as a union of translates"""
    out: SignedImage = set()
    for s, g in left:
        if (s, g) in out:
            continue
        out.update((s * t, mat_mul_mod(g, h, N)) for t, h in right)
    return out


def check_compatible(small: GroupDescriptor, big: GroupDescriptor) -> bool:
    """(Gamma, Delta) -> (Gamma', Delta') is compatible at the finite level.

    Checks Gamma = Gamma' n Delta Delta^-1 and Gamma' Delta = Delta' on the
    images at the common level. Delta Delta^-1 has the same image as Delta
    because H is a group.
    """
    L = common_level(small, big)
    small_l, big_l = small.lift(L), big.lift(L)
    gamma, delta = group_image(small_l), semigroup_image(small_l)
    gamma_big, delta_big = group_image(big_l), semigroup_image(big_l)
    first = gamma == (gamma_big & delta)
    second = first and _product(L, gamma_big, delta) == delta_big
    logger.debug(f"Compatibility {small.name} -> {big.name} at level {L}: {first}, {second}")
    return first and second
