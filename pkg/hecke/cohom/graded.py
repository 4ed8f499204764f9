"""Direct sums of cohomology over a class group, graded Hecke operators and twisted eigenforms"""

from typing import Dict, Optional, Sequence

import numpy as np

from hecke.errors import MathDomainError
from hecke.exact.fields import Field
from hecke.algebra.grading import ClassCharacter, ClassElement, EigenSystem, OperatorLabel, SyntheticClassGroup
from hecke.cohom.action import HeckeMatrix


class GradedFamily:
    """sum over c in C of H_c, every component realized by the same space.

    An operator of grade g maps H_c to H_{c+g} by the component matrix.
    """

    def __init__(self, classes: SyntheticClassGroup, field: Field, dim: int):
        self.classes = classes
        self.field = field
        self.dim = dim
        self.components = classes.elements()
        self._position = {c: i for i, c in enumerate(self.components)}

    @property
    def total_dim(self) -> int:
        return len(self.components) * self.dim

    def operator(self, matrix: np.ndarray, grade: ClassElement) -> np.ndarray:
        F, d = self.field, self.dim
        out = F.zeros(self.total_dim, self.total_dim)
        for c in self.components:
            i = self._position[c]
            j = self._position[self.classes.add(c, grade)]
            out[i * d:(i + 1) * d, j * d:(j + 1) * d] = matrix
        return out

    def operators(self, matrices: Sequence[HeckeMatrix]) -> Dict[OperatorLabel, np.ndarray]:
        return {m.label: self.operator(m.matrix, self.classes.grade_of_det(m.label.det)) for m in matrices}

    def lift(self, v: np.ndarray, chi: Optional[ClassCharacter] = None) -> np.ndarray:
        """f^chi = sum_c chi(c)^-1 f_c with every f_c equal to v"""
        F, d = self.field, self.dim
        out = F.zeros(1, self.total_dim)
        v = np.asarray(v).reshape(-1)
        for c in self.components:
            i = self._position[c]
            scale = F.one if chi is None else F.inv(F.convert(chi(c)))
            out[0, i * d:(i + 1) * d] = F.mscale(scale, v.reshape(1, -1))[0]
        return out

    def eigensystem(self, f: np.ndarray, operators: Dict[OperatorLabel, np.ndarray]) -> EigenSystem:
        """Eigenvalues of f under each operator; f must be a common eigenvector"""
        F = self.field
        f = np.asarray(f).reshape(1, -1)
        lead = next((k for k in range(f.shape[1]) if not F.is_zero(f[0, k])), None)
        if lead is None:
            raise MathDomainError("the zero vector has no eigensystem")
        values, grades = {}, {}
        for label, M in operators.items():
            image = F.matmul(f, M)
            lam = F.div(image[0, lead], f[0, lead])
            if not F.equal(image, F.mscale(lam, f)):
                raise MathDomainError(f"not an eigenvector of {label}")
            values[label] = lam
            grades[label] = self.classes.grade_of_det(label.det)
        return EigenSystem(F, values, grades)
