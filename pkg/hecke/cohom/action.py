"""Hecke operators on H^0 and H^1, the Shapiro map and conjugation transport.

For T = sum a_j Gamma delta_j, right Gamma'-invariant, and gamma' in Gamma',
write delta_j gamma' = t_j delta_r(j) with t_j in Gamma. On inhomogeneous
cocycles
    (T f)(gamma') = sum_j a_j f(t_j) delta_r(j)
and on invariants (T v) = sum_j a_j v delta_j.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional

import numpy as np

from hecke.constants import CohomPath, logger
from hecke.errors import InternalError, MathDomainError
from hecke.exact.fields import Field
from hecke.exact.poly import Polynomial, char_poly, poly_to_str
from hecke.modgroup.gmat import GMat
from hecke.algebra.cosets import DoubleCosetSum, coset_key, hecke_ta, hecke_tp
from hecke.algebra.grading import OperatorLabel
from hecke.cohom.space import CohomSpace


@dataclass
class HeckeMatrix:
    """Matrix of an operator on the chosen basis, acting on coordinate rows (x -> x M)"""

    label: OperatorLabel
    matrix: np.ndarray
    field: Field
    group_hash: str
    module_hash: str
    degree: int = 1

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def char_poly(self) -> Polynomial:
        return char_poly(self.field, self.matrix)

    def commutes_with(self, other: "HeckeMatrix") -> bool:
        F = self.field
        return F.equal(F.matmul(self.matrix, other.matrix), F.matmul(other.matrix, self.matrix))

    def to_record(self) -> dict:
        F = self.field
        return {
            "label": {"p": self.label.p, "m": self.label.m, "kind": self.label.kind, "name": str(self.label)},
            "matrix": [[F.to_str(x) for x in row] for row in self.matrix],
            "field": F.name,
            "degree": self.degree,
            "group_hash": self.group_hash,
            "module_hash": self.module_hash,
            "char_poly": poly_to_str(F, self.char_poly()),
        }


def _image_rows(T: DoubleCosetSum, C: np.ndarray, source: CohomSpace, target: CohomSpace) -> np.ndarray:
    """Cocycle rows of T f on the generators of the target group, for each cocycle row f of C"""
    F, M = source.field, source.module
    terms = T.terms
    rows = C.shape[0]
    if source.degree == 0:
        out = F.zeros(rows, source.d)
        for a, delta in terms:
            out = F.madd(out, F.mscale(F.convert(a), F.matmul(C, M.matrix(delta))))
        return out
    index = {k: j for j, k in enumerate(T.keys)}
    blocks = []
    for gp in target.presentation.matrices:
        acc = F.zeros(rows, source.d)
        for a, delta in terms:
            moved = delta @ gp
            r = index.get(coset_key(T.left, moved))
            if r is None:
                raise InternalError(f"not a Hecke module datum: {delta} {gp} leaves the double coset")
            delta_r = terms[r][1]
            t = moved.right_quotient(delta_r)
            if not T.left.contains(t):
                raise InternalError(f"not a Hecke module datum: {t} is not in {T.left.name}")
            value = F.matmul(source.evaluate_at(C, t), M.matrix(delta_r))
            acc = F.madd(acc, F.mscale(F.convert(a), value))
        blocks.append(acc)
    if not blocks:
        return F.zeros(rows, 0)
    return np.concatenate([np.asarray(b, dtype=F.dtype) for b in blocks], axis=1)


def hecke_action(T: DoubleCosetSum, source: CohomSpace, target: Optional[CohomSpace] = None) -> np.ndarray:
    """Matrix of H^i(Gamma, M) -> H^i(Gamma', M) on the chosen bases"""
    target = target or source
    if T.left != source.group or T.right != target.group:
        raise MathDomainError("group mismatch")
    if source.degree != target.degree or source.module.describe() != target.module.describe():
        raise MathDomainError("source and target spaces have different coefficients")
    return target.coordinates(_image_rows(T, source.basis, source, target))


def hecke_operator(label: OperatorLabel, space: CohomSpace) -> DoubleCosetSum:
    """The double coset sum of a label at the group carrying the space"""
    if label.kind == "a":
        return hecke_ta(label.p, space.group)
    return hecke_tp(label.p, label.m, space.group)


def hecke_matrix(space: CohomSpace, label: OperatorLabel) -> HeckeMatrix:
    if gcd(label.det, space.source_group.level) != 1:
        raise MathDomainError("determinant not prime to level")
    T = hecke_operator(label, space)
    matrix = hecke_action(T, space)
    logger.debug(f"{label} on H^{space.degree}({space.source_group.name}): {space.dim} x {space.dim}")
    return HeckeMatrix(label, matrix, space.field, space.source_group.descriptor_hash, space.base_module.module_hash, space.degree)


def coboundaries_preserved(T: DoubleCosetSum, space: CohomSpace) -> bool:
    """T maps every coboundary to a coboundary"""
    F = space.field
    if space.degree == 0 or space.coboundary_dim == 0:
        return True
    U = _image_rows(T, space.coboundary_basis, space, space)
    return F.is_zero_matrix(F.reduce_rows(U, space.coboundary_basis, space.coboundary_pivots))


def shapiro(ambient: CohomSpace, direct: CohomSpace) -> np.ndarray:
    """H^i(G, Ind(Gamma, G, M)) -> H^i(Gamma, M): evaluate at the identity coset"""
    if ambient.degree != direct.degree:
        raise MathDomainError("Shapiro map between different degrees")
    if ambient.source_group != direct.group:
        raise MathDomainError("group mismatch")
    F = ambient.field
    if ambient.group == direct.group:
        return F.identity(ambient.dim)
    d = direct.d
    if ambient.degree == 0:
        S = direct.coordinates(np.asarray(ambient.basis)[:, :d])
    else:
        values = [np.asarray(ambient.evaluate_at(ambient.basis, g))[:, :d] for g in direct.presentation.matrices]
        S = direct.coordinates(np.concatenate([np.asarray(v, dtype=F.dtype) for v in values], axis=1))
    if S.shape[0] != S.shape[1] or F.rank(S) != S.shape[0]:
        raise InternalError(f"Shapiro map is not an isomorphism ({S.shape[0]} -> {S.shape[1]})")
    return S


def conjugation_transport(g: GMat, space: CohomSpace) -> tuple:
    """(transported space at g Gamma g^-1, matrix of f -> (gamma -> f(g^-1 gamma g) g^-1))"""
    if not g.is_unit:
        raise MathDomainError(f"conjugation needs a unit, got {g}")
    F, M = space.field, space.module
    gi = g.inverse()
    conj = space.group.conjugate(g)
    target = CohomSpace(conj, M, space.degree, CohomPath.DIRECT)
    if space.degree == 0:
        return target, target.coordinates(F.matmul(space.basis, M.matrix(gi)))
    values = [F.matmul(space.evaluate_at(space.basis, gi @ h @ g), M.matrix(gi)) for h in target.presentation.matrices]
    U = np.concatenate([np.asarray(v, dtype=F.dtype) for v in values], axis=1)
    return target, target.coordinates(U)


@dataclass
class TransportSquare:
    source_transport: np.ndarray
    target_transport: np.ndarray
    operator: np.ndarray
    transported_operator: np.ndarray
    commutes: bool


def conjugation_square(
    g: GMat, g_prime: GMat, T: DoubleCosetSum, source: CohomSpace, target: Optional[CohomSpace] = None
) -> TransportSquare:
    """The square T, c_g, c_g', and g T g'^-1; raises when it fails to commute"""
    target = target or source
    F = source.field
    hat_source, Cg = conjugation_transport(g, source)
    if target is source and g == g_prime:
        hat_target, Cgp = hat_source, Cg
    else:
        hat_target, Cgp = conjugation_transport(g_prime, target)
    gpi = g_prime.inverse()
    hat_T = DoubleCosetSum.from_matrices(hat_source.group, hat_target.group, [(a, g @ d @ gpi) for a, d in T.terms])
    MT = hecke_action(T, source, target)
    MhT = hecke_action(hat_T, hat_source, hat_target)
    commutes = F.equal(F.matmul(MT, Cgp), F.matmul(Cg, MhT))
    if not commutes:
        raise InternalError("conjugation square does not commute")
    return TransportSquare(Cg, Cgp, MT, MhT, commutes)
