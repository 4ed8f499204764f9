"""Right coefficient modules: Sym^k (x) det^e, admissible modules, characters and twists"""

import hashlib
from abc import ABC, abstractmethod
from math import comb, gcd, lcm
from typing import Dict, List, Sequence

import numpy as np

from hecke.constants import ModuleKind, logger
from hecke.errors import MathDomainError, ValidationError
from hecke.exact.fields import Field, QQ_FIELD, common_field
from hecke.finite_groups import FiniteGroup, ModMat, Signed, det_mod, identity_mod, signed_group
from hecke.modgroup.gmat import GMat
from hecke.coeffmod.characters import Character


class CoefficientModule(ABC):
    """A finite-dimensional right module for a matrix semigroup.

    Vectors are rows over ``field``; ``matrix(delta)`` is the matrix of
    v -> v * delta. Matrices are cached per delta, modules never change.
    """

    kind: ModuleKind

    def __init__(self, field: Field):
        self.field = field
        self._cache: Dict[GMat, np.ndarray] = {}

    @property
    @abstractmethod
    def dim(self) -> int:
        """Dimension over the base field"""

    @property
    def level(self) -> int:
        """N such that the action factors through (sign, mod N); 1 for direct modules"""
        return 1

    @property
    def is_admissible(self) -> bool:
        return False

    @abstractmethod
    def describe(self) -> str:
        """Stable text descriptor, e.g. 'sym:10:0:Q'"""

    @abstractmethod
    def _compute(self, delta: GMat) -> np.ndarray:
        """Uncached action matrix"""

    def matrix(self, delta: GMat) -> np.ndarray:
        M = self._cache.get(delta)
        if M is None:
            M = self._compute(delta)
            self._cache[delta] = M
        return M

    def act(self, v: np.ndarray, delta: GMat) -> np.ndarray:
        v = np.asarray(v)
        if v.ndim == 1:
            return self.field.matmul(v.reshape(1, -1), self.matrix(delta))[0]
        return self.field.matmul(v, self.matrix(delta))

    def matrix_of_image(self, sign: int, image: ModMat) -> np.ndarray:
        """Action of the finite-level element (sign, image mod level)"""
        raise MathDomainError(f"module {self.describe()} is not admissible")

    @property
    def module_hash(self) -> str:
        return hashlib.sha256(self.describe().encode()).hexdigest()[:16]

    def to_record(self) -> dict:
        return {"kind": self.kind.value, "descriptor": self.describe(), "dim": self.dim, "field": self.field.name, "hash": self.module_hash}

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.describe()} dim={self.dim}>"


def sym_power_matrix(k: int, a: int, b: int, c: int, d: int) -> List[List[int]]:
    """Integer matrix of P(X, Y) -> P(aX + bY, cX + dY) on X^k, X^(k-1) Y, ..., Y^k"""

    def linear_power(u: int, v: int, m: int) -> List[int]:
        # (uX + vY)^m, coefficient of X^(m-s) Y^s at index s
        return [comb(m, s) * u ** (m - s) * v**s for s in range(m + 1)]

    rows = []
    for i in range(k + 1):
        left = linear_power(a, b, k - i)
        right = linear_power(c, d, i)
        row = [0] * (k + 1)
        for s, x in enumerate(left):
            if x:
                for t, y in enumerate(right):
                    row[s + t] += x * y
        rows.append(row)
    return rows


class SymPowerModule(CoefficientModule):
    """Sym^k(F^2) (x) det^e with the substitution action"""

    kind = ModuleKind.SYM

    def __init__(self, k: int, e: int = 0, field: Field = QQ_FIELD):
        if k < 0:
            raise ValidationError(f"symmetric power must be non-negative, got {k}")
        super().__init__(field)
        self.k = k
        self.e = e

    @property
    def dim(self) -> int:
        return self.k + 1

    def describe(self) -> str:
        return f"sym:{self.k}:{self.e}:{self.field.name}"

    def _compute(self, delta: GMat) -> np.ndarray:
        if delta.n != 2:
            raise MathDomainError("symmetric powers are realized for 2 x 2 matrices")
        F = self.field
        (a, b), (c, d) = delta.rows
        M = F.matrix(sym_power_matrix(self.k, a, b, c, d))
        if self.e:
            det = F.convert(delta.det)
            if F.is_zero(det) and self.e < 0:
                raise MathDomainError(f"det {delta.det} is not invertible in {F.name}")
            M = F.mscale(F.power(det, self.e), M)
        return M

    def to_record(self) -> dict:
        record = super().to_record()
        record.update({"k": self.k, "e": self.e})
        return record


def _check_det(delta: GMat, N: int) -> int:
    d = delta.det
    if d == 0:
        raise MathDomainError("singular")
    if gcd(d, N) != 1:
        raise MathDomainError("determinant not prime to level")
    return 1 if d > 0 else -1


class AdmissibleModule(CoefficientModule):
    """A representation of a finite group inside {+1, -1} x GL_2(Z/N).

    delta acts through (sign(det delta), delta mod N); the images of all
    group elements are computed once from the generator matrices.
    """

    kind = ModuleKind.ADMISSIBLE

    def __init__(self, level: int, field: Field, group: FiniteGroup, images: Sequence[np.ndarray], name: str = "W"):
        super().__init__(field)
        self._level = level
        self.group = group
        self.images = list(images)
        self.name = name
        self._dim = self.images[0].shape[0]

    @classmethod
    def from_generators(
        cls,
        level: int,
        field: Field,
        generators: Sequence[ModMat],
        matrices: Sequence,
        sign_matrix=None,
        name: str = "W",
    ) -> "AdmissibleModule":
        """Build and exhaustively verify the representation fixed on generators.

        The sign -1 acts by ``sign_matrix`` (identity when omitted).
        """
        if len(generators) != len(matrices):
            raise ValidationError("one matrix per generator is required")
        group = signed_group(level, (1, -1), generators, name=f"{name} group mod {level}")
        gen_mats = [np.array(field.matrix(m), dtype=field.dtype) for m in matrices]
        dim = gen_mats[0].shape[0] if gen_mats else (len(sign_matrix) if sign_matrix is not None else 1)
        gen_mats.append(field.matrix(sign_matrix) if sign_matrix is not None else field.identity(dim))
        for m in gen_mats:
            if m.shape != (dim, dim) or field.rank(m) != dim:
                raise ValidationError(f"generator matrices of {name} must be invertible {dim} x {dim}")
        images = group.extend_representation(gen_mats, field.matmul, field.identity(dim))
        # well defined on every element, not just along the BFS tree
        for i, x in enumerate(group.elements):
            for k, s in enumerate(group.generators):
                j = group.index(group.mul(x, s))
                if not field.equal(images[j], field.matmul(images[i], gen_mats[k])):
                    raise ValidationError(f"matrices of {name} do not define a representation")
        logger.debug(f"Admissible module {name}: dim {dim}, group of order {group.order} verified")
        return cls(level, field, group, images, name)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def level(self) -> int:
        return self._level

    @property
    def is_admissible(self) -> bool:
        return True

    def describe(self) -> str:
        return f"admissible:{self.name}:{self._level}:{self.field.name}"

    def generator_matrices(self) -> List[np.ndarray]:
        return [self.images[self.group.index(s)] for s in self.group.generators]

    def matrix_of_image(self, sign: int, image: ModMat) -> np.ndarray:
        key: Signed = (sign, tuple(x % self._level for x in image))
        if key not in self.group:
            raise MathDomainError(f"{key} acts outside the group of {self.name}")
        return self.images[self.group.index(key)]

    def _compute(self, delta: GMat) -> np.ndarray:
        sign = _check_det(delta, self._level)
        return self.matrix_of_image(sign, delta.mod(self._level))


class CharacterModule(CoefficientModule):
    """The one-dimensional module F(chi): delta acts by chi(sign det, det mod M)"""

    kind = ModuleKind.ADMISSIBLE

    def __init__(self, chi: Character):
        super().__init__(chi.field)
        self.chi = chi

    @property
    def dim(self) -> int:
        return 1

    @property
    def level(self) -> int:
        return self.chi.modulus

    @property
    def is_admissible(self) -> bool:
        return True

    def describe(self) -> str:
        if self.chi.is_trivial:
            return f"trivial:{self.field.name}" if self.chi.modulus == 1 else f"char:{self.chi.modulus}:trivial:{self.field.name}"
        values = ",".join(self.field.to_str(v) for v in self.chi.gen_values)
        return f"char:{self.chi.modulus}:{self.field.to_str(self.chi.sign_value)}:{values}:{self.field.name}"

    def matrix_of_image(self, sign: int, image: ModMat) -> np.ndarray:
        M = self.chi.modulus
        return self.field.matrix([[self.chi(sign, det_mod(tuple(x % M for x in image), M) if M > 1 else 1)]])

    def _compute(self, delta: GMat) -> np.ndarray:
        _check_det(delta, self.chi.modulus)
        return self.field.matrix([[self.chi.of_det(delta.det)]])

    def to_record(self) -> dict:
        record = super().to_record()
        record["character"] = self.chi.to_record()
        return record


def trivial_module(field: Field) -> CharacterModule:
    return CharacterModule(Character.trivial(1, field))


class TwistedModule(CoefficientModule):
    """M(chi): the same space with the action multiplied by chi(sign, det)"""

    kind = ModuleKind.ADMISSIBLE

    def __init__(self, base: CoefficientModule, chi: Character):
        if not base.is_admissible:
            raise MathDomainError("twist requires admissible")
        super().__init__(common_field(base.field, chi.field))
        self.base = base
        self.chi = chi

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def level(self) -> int:
        return lcm(self.base.level, self.chi.modulus)

    @property
    def is_admissible(self) -> bool:
        return True

    def describe(self) -> str:
        return f"twist({self.base.describe()};{CharacterModule(self.chi).describe()})"

    def _scaled(self, value, M: np.ndarray) -> np.ndarray:
        F = self.field
        return F.mscale(F.convert(value), F.lift_matrix(M, self.base.field))

    def matrix_of_image(self, sign: int, image: ModMat) -> np.ndarray:
        M = self.chi.modulus
        u = det_mod(tuple(x % M for x in image), M) if M > 1 else 1
        return self._scaled(self.chi(sign, u), self.base.matrix_of_image(sign, image))

    def _compute(self, delta: GMat) -> np.ndarray:
        _check_det(delta, self.level)
        return self._scaled(self.chi.of_det(delta.det), self.base.matrix(delta))


def twist_module(module: CoefficientModule, chi: Character) -> CoefficientModule:
    return TwistedModule(module, chi)


def check_action_law(module: CoefficientModule, elements: Sequence[GMat]) -> bool:
    """act(act(v, a), b) = act(v, a b) for all pairs of the given elements"""
    F = module.field
    for a in elements:
        for b in elements:
            if not F.equal(F.matmul(module.matrix(a), module.matrix(b)), module.matrix(a @ b)):
                return False
    return True


def acts_trivially_on_kernel(module: AdmissibleModule) -> bool:
    """(+1, identity mod N) acts as the identity"""
    one = identity_mod(module.level)
    F = module.field
    return F.equal(module.matrix_of_image(1, one), F.identity(module.dim))
