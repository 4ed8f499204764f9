"""Congruence subgroups of GL2(Z) / SL2(Z) described by their image H in GL2(Z/N)"""

import hashlib
from functools import cached_property
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from hecke.constants import GroupKind, SignPolicy, logger
from hecke.errors import MathDomainError, ValidationError
from hecke.finite_groups import (
    ModMat,
    det_mod,
    diag_mod,
    gl2_mod,
    mat_inv_mod,
    mat_mul_mod,
    matrix_group,
    units_mod,
)
from hecke.modgroup.coset_table import CosetTable
from hecke.modgroup.gmat import GMat
from hecke.modgroup.presentation import AmbientPresentation, Presentation, SubgroupPresentation


def _elementary_sl3() -> List[GMat]:
    gens = []
    for i in range(2):
        for a, b in ((i, i + 1), (i + 1, i)):
            m = [[int(r == c) for c in range(3)] for r in range(3)]
            m[a][b] = 1
            gens.append(GMat(m))
    return gens


class GroupDescriptor:
    """Gamma = {gamma : det gamma allowed by the sign policy, gamma mod N in H}.

    H is a subgroup of GL_n(Z/N) stored fully enumerated; it always contains
    the diagonal matrices diag(1, u). For n = 3 only the full level-1 group
    is available (coset arithmetic in the Hecke algebra, no cohomology).
    """

    def __init__(
        self,
        level: int,
        H: Iterable[ModMat],
        sign_policy: SignPolicy = SignPolicy.SL,
        kind: GroupKind = GroupKind.CUSTOM,
        n: int = 2,
        generators: Optional[Sequence[ModMat]] = None,
    ):
        if level < 1:
            raise ValidationError(f"level must be positive, got {level}")
        if n not in (2, 3):
            raise ValidationError(f"unsupported matrix size n={n}")
        if n == 3 and level != 1:
            raise ValidationError("n = 3 is supported at level 1 only")
        self.level = level
        self.n = n
        self.sign_policy = SignPolicy(sign_policy)
        self.kind = GroupKind(kind)
        self.H = frozenset(tuple(x % level for x in h) for h in H)
        self.H_generators = list(generators) if generators is not None else None
        if n == 2:
            for u in units_mod(level):
                if diag_mod(level, 1, u) not in self.H:
                    raise ValidationError(f"H must contain diag(1, {u}) mod {level}")

    # named constructors
    @classmethod
    def gamma0(cls, N: int, sign: SignPolicy = SignPolicy.SL) -> "GroupDescriptor":
        us = units_mod(N)
        H = [(a, b, 0, d) for a in us for d in us for b in range(N)] if N > 1 else [(0, 0, 0, 0)]
        return cls(N, H, sign, GroupKind.GAMMA0)

    @classmethod
    def gamma1_upper(cls, N: int, sign: SignPolicy = SignPolicy.SL) -> "GroupDescriptor":
        us = units_mod(N)
        H = [(1 % N, b, 0, d) for d in us for b in range(N)] if N > 1 else [(0, 0, 0, 0)]
        return cls(N, H, sign, GroupKind.GAMMA1_UPPER)

    @classmethod
    def gamma_diag(cls, N: int, sign: SignPolicy = SignPolicy.SL) -> "GroupDescriptor":
        H = [diag_mod(N, 1, d) for d in units_mod(N)]
        return cls(N, H, sign, GroupKind.GAMMA_DIAG)

    @classmethod
    def full(cls, sign: SignPolicy = SignPolicy.SL, n: int = 2) -> "GroupDescriptor":
        return cls(1, [tuple([0] * (n * n))], sign, GroupKind.FULL, n=n)

    @classmethod
    def custom(cls, N: int, generators: Sequence[Sequence[int]], sign: SignPolicy = SignPolicy.SL) -> "GroupDescriptor":
        gens = [tuple(int(x) % N for x in g) for g in generators]
        gens += [diag_mod(N, 1, u) for u in units_mod(N)]
        for g in gens:
            if gcd(det_mod(g, N), N) != 1:
                raise ValidationError(f"generator {g} is not invertible mod {N}")
        group = matrix_group(N, gens, name=f"H mod {N}")
        return cls(N, group.elements, sign, GroupKind.CUSTOM, generators=gens)

    # identity
    @property
    def allowed_signs(self) -> Tuple[int, ...]:
        return (1,) if self.sign_policy == SignPolicy.SL else (1, -1)

    @cached_property
    def descriptor_hash(self) -> str:
        payload = f"{self.n}|{self.level}|{self.sign_policy.value}|{sorted(self.H)}"
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    @property
    def name(self) -> str:
        if self.kind == GroupKind.FULL:
            base = "SL" if self.sign_policy == SignPolicy.SL else "GL"
            return f"{base}{self.n}(Z)"
        return f"{self.kind.value}({self.level},{self.sign_policy.value})"

    def __repr__(self) -> str:
        return f"<GroupDescriptor {self.name} {self.descriptor_hash}>"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupDescriptor)
            and (self.n, self.level, self.sign_policy, self.H) == (other.n, other.level, other.sign_policy, other.H)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.level, self.sign_policy, self.H))

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "N": self.level,
            "type": self.kind.value,
            "sign": self.sign_policy.value,
            "hash": self.descriptor_hash,
        }

    # membership
    def contains(self, g: GMat) -> bool:
        if g.n != self.n:
            return False
        if g.det not in self.allowed_signs:
            return False
        return g.mod(self.level) in self.H

    __contains__ = contains

    def det_allowed_mod(self) -> set:
        N = self.level
        return {s % N for s in self.allowed_signs}

    @cached_property
    def ambient_image_subgroup(self) -> List[ModMat]:
        """H intersected with the reduction of the ambient group"""
        if self.n == 3:
            return sorted(self.H)
        allowed = self.det_allowed_mod()
        return sorted(h for h in self.H if det_mod(h, self.level) in allowed)

    @property
    def ambient_presentation(self) -> AmbientPresentation:
        if self.n != 2:
            raise ValidationError("presentations are available for n = 2 only")
        return AmbientPresentation.for_policy(self.sign_policy)

    @cached_property
    def coset_table(self) -> CosetTable:
        if self.n == 3:
            return CosetTable(1, [tuple([0] * 9)], _elementary_sl3(), n=3)
        return CosetTable(self.level, self.ambient_image_subgroup, self.ambient_presentation.matrices)

    @property
    def index(self) -> int:
        return self.coset_table.index

    @cached_property
    def presentation(self) -> Presentation:
        if self.n == 3:
            raise ValidationError("presentations are available for n = 2 only")
        if self.index == 1:
            return self.ambient_presentation
        return SubgroupPresentation(self.coset_table, self.ambient_presentation)

    @cached_property
    def generators(self) -> List[GMat]:
        """Matrix generators of Gamma"""
        if self.n == 3:
            gens = _elementary_sl3()
            if self.sign_policy == SignPolicy.GL:
                gens.append(GMat.diag(1, 1, -1))
            return gens
        return list(self.presentation.matrices)

    # derived descriptors
    def conjugate(self, g: GMat) -> "GroupDescriptor":
        """The descriptor of g Gamma g^-1 for a unit g"""
        if not g.is_unit:
            raise MathDomainError(f"conjugation needs a unit, got {g}")
        N = self.level
        gb = g.mod(N)
        gi = mat_inv_mod(gb, N)
        H = [mat_mul_mod(mat_mul_mod(gb, h, N), gi, N) for h in self.H]
        conj = GroupDescriptor.__new__(GroupDescriptor)
        conj.level, conj.n, conj.sign_policy, conj.kind = N, self.n, self.sign_policy, GroupKind.CUSTOM
        conj.H = frozenset(H)
        conj.H_generators = None
        return conj

    def lift(self, M: int) -> "GroupDescriptor":
        """The same group described at a level M divisible by N"""
        N = self.level
        if M % N:
            raise ValidationError(f"cannot lift level {N} to {M}")
        if M == N:
            return self
        H = [h for h in gl2_mod(M) if tuple(x % N for x in h) in self.H]
        return GroupDescriptor(M, H, self.sign_policy, self.kind)

    def with_sign(self, sign: SignPolicy) -> "GroupDescriptor":
        return GroupDescriptor(self.level, self.H, sign, self.kind, self.n, self.H_generators)

    @cached_property
    def semigroup(self) -> "SemigroupDescriptor":
        return SemigroupDescriptor(self)


class SemigroupDescriptor:
    """Delta_H: integral delta with det prime to N and (delta mod N) in H"""

    def __init__(self, group: GroupDescriptor):
        self.group = group

    @property
    def level(self) -> int:
        return self.group.level

    def contains(self, delta: GMat) -> bool:
        d = delta.det
        if d == 0 or gcd(d, self.level) != 1:
            return False
        if self.group.sign_policy == SignPolicy.SL and d < 0:
            return False
        return delta.mod(self.level) in self.group.H

    __contains__ = contains

    def check(self, delta: GMat) -> None:
        """Raise with the reason when delta is not in the semigroup"""
        d = delta.det
        if d == 0:
            raise MathDomainError("singular")
        if gcd(d, self.level) != 1:
            raise MathDomainError("determinant not prime to level")
        if not self.contains(delta):
            raise MathDomainError(f"{delta} is not in the semigroup of {self.group.name}")
        logger.debug(f"{delta} accepted by the semigroup of {self.group.name}")
