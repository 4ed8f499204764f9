"""H^0 and H^1 of a finitely presented matrix group with coefficients in a right module.

A 1-cocycle is stored by its values C_1, ..., C_n on the presentation
generators, concatenated into one row of length n * dim. For a right
cocycle f(gh) = f(g) h + f(h), so a word is evaluated letter by letter:
    x     : F <- F rho(x) + C_x
    x^-1  : F <- (F - C_x) rho(x^-1)
Applying this to every relator gives the linear conditions cutting out Z^1.
"""

from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from hecke.constants import CohomPath, logger
from hecke.errors import InternalError, MathDomainError, ValidationError
from hecke.exact.fields import Field
from hecke.modgroup.gmat import GMat
from hecke.modgroup.groups import GroupDescriptor
from hecke.modgroup.presentation import Presentation, unit_letters
from hecke.coeffmod.induced import induce
from hecke.coeffmod.modules import CoefficientModule


class CohomSpace:
    """H^degree(group, module) with deterministic echelon bases.

    ``group`` is the group whose presentation is used; on the ambient path it
    is SL2(Z) or GL2(Z) and ``module`` is the induced module, while
    ``source_group`` and ``base_module`` keep the group and module asked for.
    """

    def __init__(
        self,
        group: GroupDescriptor,
        module: CoefficientModule,
        degree: int,
        path: CohomPath = CohomPath.DIRECT,
        source_group: Optional[GroupDescriptor] = None,
        base_module: Optional[CoefficientModule] = None,
    ):
        if degree not in (0, 1):
            raise ValidationError(f"cohomology is computed in degrees 0 and 1, got {degree}")
        self.group = group
        self.module = module
        self.degree = degree
        self.path = CohomPath(path)
        self.source_group = source_group or group
        self.base_module = base_module or module
        self.presentation: Presentation = group.presentation
        try:
            self.gen_matrices = [module.matrix(g) for g in self.presentation.matrices]
            self.inv_matrices = [
                module.matrix(self.presentation.inverse_matrix(k)) for k in range(self.presentation.n_generators)
            ]
        except MathDomainError as e:
            raise MathDomainError(f"module {module.describe()} does not carry an action of {group.name}: {e.message}") from e
        self._build()
        logger.debug(f"H^{degree}({self.source_group.name}, {self.base_module.describe()}) via {self.path.value}: dim {self.dim}")

    @property
    def field(self) -> Field:
        return self.module.field

    @property
    def d(self) -> int:
        return self.module.dim

    @property
    def n(self) -> int:
        return self.presentation.n_generators

    @property
    def width(self) -> int:
        """Length of a stored cocycle row"""
        return self.d if self.degree == 0 else self.n * self.d

    def _coboundary_matrix(self) -> np.ndarray:
        """Rows v(rho(x_i) - 1) over all generators, as a dim x (n * dim) matrix"""
        F = self.field
        one = F.identity(self.d)
        if self.n == 0:
            return F.zeros(self.d, 0)
        return np.concatenate([np.asarray(F.msub(m, one), dtype=F.dtype) for m in self.gen_matrices], axis=1)

    def _selector(self, k: int) -> np.ndarray:
        F, d = self.field, self.d
        E = F.zeros(self.n * d, d)
        E[k * d:(k + 1) * d, :] = F.identity(d)
        return E

    def relator_matrix(self, word: Sequence[Tuple[int, int]]) -> np.ndarray:
        """L_w with f(w) = C @ L_w for the cocycle values C"""
        F = self.field
        A = F.zeros(self.n * self.d, self.d)
        for k, e in unit_letters(word):
            if e > 0:
                A = F.madd(F.matmul(A, self.gen_matrices[k]), self._selector(k))
            else:
                A = F.matmul(F.msub(A, self._selector(k)), self.inv_matrices[k])
        return A

    def _build(self) -> None:
        F = self.field
        B = self._coboundary_matrix()
        if self.degree == 0:
            self.basis, self.pivots = F.row_basis(F.left_kernel_basis(B))
            self.cocycle_basis = self.basis
            self.coboundary_basis, self.coboundary_pivots = F.zeros(0, self.d), []
            return
        width = self.n * self.d
        blocks = [self.relator_matrix(r) for r in self.presentation.relators]
        if blocks:
            self.relation_matrix = np.concatenate([np.asarray(b, dtype=F.dtype) for b in blocks], axis=1)
            Z = F.left_kernel_basis(self.relation_matrix)
        else:
            self.relation_matrix = F.zeros(width, 0)
            Z = F.identity(width)
        self.cocycle_basis = Z
        self.coboundary_basis, self.coboundary_pivots = F.row_basis(B)
        if not F.is_zero_matrix(F.matmul(self.coboundary_basis, self.relation_matrix)):
            raise InternalError("coboundaries fail the cocycle conditions")
        reduced = F.reduce_rows(Z, self.coboundary_basis, self.coboundary_pivots)
        self.basis, self.pivots = F.row_basis(reduced)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def cocycle_dim(self) -> int:
        return self.cocycle_basis.shape[0]

    @property
    def coboundary_dim(self) -> int:
        return len(self.coboundary_pivots)

    def is_cocycle(self, U: np.ndarray) -> bool:
        if self.degree == 0:
            return self.field.is_zero_matrix(self.field.matmul(U, self._coboundary_matrix()))
        return self.field.is_zero_matrix(self.field.matmul(U, self.relation_matrix))

    def coordinates(self, U: np.ndarray) -> np.ndarray:
        """Coordinates on the chosen basis of the classes of the rows of U (which must be cocycles)"""
        F = self.field
        U = np.asarray(U, dtype=F.dtype).reshape(-1, self.width)
        if not self.is_cocycle(U):
            raise InternalError("projection of a non-cocycle")
        h = F.reduce_rows(U, self.coboundary_basis, self.coboundary_pivots)
        coords = np.array(h[:, self.pivots], dtype=F.dtype)
        if not F.equal(F.matmul(coords, self.basis), h):
            raise InternalError("class does not lie in the span of the chosen basis")
        return coords

    def evaluate(self, C: np.ndarray, word: Sequence[Tuple[int, int]]) -> np.ndarray:
        """Values f(w) for every cocycle row of C, as a matrix with one row per cocycle"""
        F, d = self.field, self.d
        C = np.asarray(C, dtype=F.dtype)
        out = F.zeros(C.shape[0], d)
        for k, e in unit_letters(word):
            block = C[:, k * d:(k + 1) * d]
            if e > 0:
                out = F.madd(F.matmul(out, self.gen_matrices[k]), block)
            else:
                out = F.matmul(F.msub(out, block), self.inv_matrices[k])
        return out

    def evaluate_at(self, C: np.ndarray, g: GMat) -> np.ndarray:
        return self.evaluate(C, self.presentation.word_for(g))

    @cached_property
    def generator_words(self) -> List[str]:
        return [self.presentation.word_to_str([(k, 1)]) for k in range(self.n)]

    def to_record(self) -> dict:
        return {
            "group": self.source_group.to_record(),
            "module": self.base_module.to_record(),
            "degree": self.degree,
            "path": self.path.value,
            "dim": self.dim,
            "cocycle_dim": self.cocycle_dim if self.degree == 1 else self.dim,
            "coboundary_dim": self.coboundary_dim,
            "generators": self.generator_words,
        }


def ambient_group(group: GroupDescriptor) -> GroupDescriptor:
    return GroupDescriptor.full(group.sign_policy)


def cohomology(
    group: GroupDescriptor, module: CoefficientModule, degree: int, path: CohomPath = CohomPath.AMBIENT
) -> CohomSpace:
    """H^degree(group, module), computed at the ambient group with induced coefficients or directly"""
    path = CohomPath(path)
    if group.n != 2:
        raise ValidationError("cohomology is available for 2 x 2 groups")
    if path == CohomPath.DIRECT or group.index == 1:
        return CohomSpace(group, module, degree, path, group, module)
    G = ambient_group(group)
    return CohomSpace(G, induce(group, G, module), degree, path, group, module)


def h0(group: GroupDescriptor, module: CoefficientModule, path: CohomPath = CohomPath.AMBIENT) -> CohomSpace:
    return cohomology(group, module, 0, path)


def h1(group: GroupDescriptor, module: CoefficientModule, path: CohomPath = CohomPath.AMBIENT) -> CohomSpace:
    return cohomology(group, module, 1, path)
