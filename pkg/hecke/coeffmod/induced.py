"""Induced modules Ind(Gamma, Gamma', V) with the Gamma'- and Delta'-actions"""

from collections import deque
from math import gcd, lcm
from typing import Dict, List

import numpy as np

from hecke.constants import ModuleKind, logger
from hecke.errors import InternalError, MathDomainError
from hecke.finite_groups import ModMat, det_mod, diag_mod, mat_inv_mod, mat_mul_mod
from hecke.modgroup.gmat import GMat
from hecke.modgroup.groups import GroupDescriptor
from hecke.algebra.compat import check_compatible
from hecke.coeffmod.modules import CoefficientModule


def subgroup_cosets(small: GroupDescriptor, big: GroupDescriptor) -> List[GMat]:
    """Representatives r_0 = 1, r_1, ... of Gamma\\Gamma', found breadth-first over Gamma''s generators"""
    table = small.coset_table
    if big.index == 1 and big.sign_policy == small.sign_policy:
        return list(table.reps)
    reps = [GMat.identity()]
    seen = {table.lookup(reps[0]): 0}
    queue = deque([0])
    while queue:
        r = reps[queue.popleft()]
        for x in big.generators:
            g = r @ x
            a = table.lookup(g)
            if a not in seen:
                seen[a] = len(reps)
                reps.append(g)
                queue.append(len(reps) - 1)
    return reps


class InducedModule(CoefficientModule):
    """Functions f: Gamma' -> V with f(gamma gamma') = f(gamma') gamma^-1.

    A vector is the concatenation of the blocks f(r_0), ..., f(r_{k-1}) over
    the coset representatives. For delta' in Delta' and each i there is a
    unique j with r_j delta' r_i^-1 in Delta, and then
    (f delta')(r_i) = f(r_j) (r_j delta' r_i^-1).
    """

    kind = ModuleKind.INDUCED

    def __init__(self, small: GroupDescriptor, big: GroupDescriptor, inner: CoefficientModule, check: bool = True):
        super().__init__(inner.field)
        if small.sign_policy != big.sign_policy:
            raise MathDomainError("induction needs groups with the same sign policy")
        for g in small.generators:
            if g not in big:
                raise MathDomainError(f"{small.name} is not a subgroup of {big.name}")
        if check and not check_compatible(small, big):
            raise MathDomainError(f"({small.name}, {big.name}) is not a compatible pair")
        self.small = small
        self.big = big
        self.inner = inner
        self.reps = subgroup_cosets(small, big)
        self._rep_inverses = [r.inverse() for r in self.reps]
        table = small.coset_table
        self._local: Dict[int, int] = {table.lookup(r): i for i, r in enumerate(self.reps)}
        logger.debug(f"Induced module from {small.name} to {big.name}: index {self.index}, dim {self.dim}")

    @property
    def index(self) -> int:
        return len(self.reps)

    @property
    def dim(self) -> int:
        return self.index * self.inner.dim

    @property
    def level(self) -> int:
        return lcm(self.small.level, self.inner.level)

    @property
    def is_admissible(self) -> bool:
        return self.inner.is_admissible

    def describe(self) -> str:
        return f"ind({self.small.descriptor_hash}->{self.big.descriptor_hash};{self.inner.describe()})"

    def partner(self, i: int, delta: GMat) -> int:
        """The j with r_j delta r_i^-1 in Delta"""
        N = self.small.level
        self.big.semigroup.check(delta)
        if gcd(delta.det, N) != 1:
            raise MathDomainError("determinant not prime to level")
        y = mat_mul_mod(self.reps[i].mod(N), mat_inv_mod(delta.mod(N), N), N)
        if N > 1:
            # normalize into the ambient image by diag(1, det^-1), which lies in H
            y = mat_mul_mod(diag_mod(N, 1, pow(det_mod(y, N), -1, N)), y, N)
        a = self.small.coset_table.lookup_image(y)
        j = self._local.get(a)
        if j is None:
            raise MathDomainError(f"{delta} does not act on the induced module of {self.big.name}")
        return j

    def block(self, j: int, i: int, delta: GMat) -> GMat:
        g = self.reps[j] @ delta @ self._rep_inverses[i]
        if not self.small.semigroup.contains(g):
            raise InternalError(f"failed to solve for the induced action: {g} is not in the semigroup of {self.small.name}")
        return g

    def _compute(self, delta: GMat) -> np.ndarray:
        F, d, k = self.field, self.inner.dim, self.index
        out = F.zeros(k * d, k * d)
        for i in range(k):
            j = self.partner(i, delta)
            out[j * d:(j + 1) * d, i * d:(i + 1) * d] = self.inner.matrix(self.block(j, i, delta))
        return out

    def evaluate(self, f: np.ndarray, gamma_prime: GMat) -> np.ndarray:
        """f(gamma') from the stored blocks, via gamma' = gamma r_i"""
        d = self.inner.dim
        a = self.small.coset_table.lookup(gamma_prime)
        i = self._local.get(a)
        if i is None:
            raise MathDomainError(f"{gamma_prime} is not in {self.big.name}")
        gamma = gamma_prime @ self._rep_inverses[i]
        block = np.asarray(f)[i * d:(i + 1) * d]
        return self.inner.act(block, gamma.inverse())

    def shapiro_block(self, vectors: np.ndarray) -> np.ndarray:
        """Value at the identity coset: the first block of each row"""
        return np.asarray(vectors)[..., : self.inner.dim]


def induce(small: GroupDescriptor, big: GroupDescriptor, inner: CoefficientModule) -> CoefficientModule:
    if small == big:
        return inner
    return InducedModule(small, big, inner)


class FiniteInducedModel(CoefficientModule):
    """Ind(pi(Gamma), pi(Gamma'), W) built on the finite images only.

    The coset representatives are the images of the integral ones, so the
    matrices coincide with those of ``InducedModule`` under the identity
    basis map. The partner j is found by brute force over the cosets.
    """

    kind = ModuleKind.INDUCED

    def __init__(self, small: GroupDescriptor, big: GroupDescriptor, inner: CoefficientModule):
        if not inner.is_admissible:
            raise MathDomainError("finite induction requires an admissible module")
        super().__init__(inner.field)
        self.small = small
        self.big = big
        self.inner = inner
        self._level = lcm(small.level, big.level, inner.level)
        L = self._level
        reps = subgroup_cosets(small, big)
        self.rep_images: List[tuple] = [(r.sign, r.mod(L)) for r in reps]
        self._rep_inverses = [(s, mat_inv_mod(img, L)) for s, img in self.rep_images]

    @property
    def dim(self) -> int:
        return len(self.rep_images) * self.inner.dim

    @property
    def level(self) -> int:
        return self._level

    @property
    def is_admissible(self) -> bool:
        return True

    def describe(self) -> str:
        return f"finite-ind({self.small.descriptor_hash}->{self.big.descriptor_hash};{self.inner.describe()})"

    def _in_delta(self, sign: int, img: ModMat) -> bool:
        N = self.small.level
        return sign in self.small.allowed_signs and tuple(x % N for x in img) in self.small.H

    def matrix_of_image(self, sign: int, image: ModMat) -> np.ndarray:
        L = self._level
        F, d, k = self.field, self.inner.dim, len(self.rep_images)
        image = tuple(x % L for x in image)
        out = F.zeros(k * d, k * d)
        for i, (si, _) in enumerate(self.rep_images):
            si_inv, inv_i = self._rep_inverses[i]
            for j, (sj, img_j) in enumerate(self.rep_images):
                s = sj * sign * si_inv
                g = mat_mul_mod(mat_mul_mod(img_j, image, L), inv_i, L)
                if self._in_delta(s, g):
                    out[j * d:(j + 1) * d, i * d:(i + 1) * d] = self.inner.matrix_of_image(s, g)
                    break
            else:
                raise MathDomainError(f"({sign}, {image}) does not act on the finite induced model")
        return out

    def _compute(self, delta: GMat) -> np.ndarray:
        return self.matrix_of_image(delta.sign, delta.mod(self._level))


def finite_induction(small: GroupDescriptor, big: GroupDescriptor, inner: CoefficientModule) -> FiniteInducedModel:
    return FiniteInducedModel(small, big, inner)
