"""Simultaneous eigensystems of commuting operators and occurrence tests"""

from dataclasses import dataclass, field as dc_field
from math import lcm
from typing import Dict, List, Optional, Sequence

import numpy as np

from hecke.constants import logger
from hecke.errors import MathDomainError, ValidationError
from hecke.exact.fields import Field, field_embeddings, finite_field
from hecke.exact.poly import Polynomial, char_poly, degree, eval_matrix, factor, poly_pow, poly_to_str
from hecke.algebra.grading import EigenSystem, OperatorLabel
from hecke.cohom.action import HeckeMatrix


@dataclass
class ReportEntry:
    """A joint generalized eigenspace.

    ``system`` is set when every operator has a linear factor there; otherwise
    ``factors`` holds the irreducible factor of each operator.
    """

    factors: Dict[OperatorLabel, Polynomial]
    field: Field
    dim: int
    system: Optional[EigenSystem] = None

    @property
    def degree(self) -> int:
        out = 1
        for f in self.factors.values():
            out = lcm(out, degree(f))
        return out

    @property
    def multiplicity(self) -> int:
        return self.dim // self.degree

    def to_record(self) -> dict:
        F = self.field
        record = {
            "field": F.name,
            "multiplicity": self.multiplicity,
            "degree": self.degree,
            "factors": {str(l): poly_to_str(F, f) for l, f in sorted(self.factors.items())},
        }
        if self.system is not None:
            record["values"] = {str(l): F.to_str(v) for l, v in sorted(self.system.values.items())}
            record["extension_degree"] = self.system.extension_degree
        return record


@dataclass
class EigenReport:
    labels: List[OperatorLabel]
    field: Field
    dim: int
    entries: List[ReportEntry] = dc_field(default_factory=list)

    @property
    def systems(self) -> List[EigenSystem]:
        return [e.system for e in self.entries if e.system is not None]

    def is_complete(self) -> bool:
        """Multiplicities times degrees add up to the dimension"""
        return sum(e.multiplicity * e.degree for e in self.entries) == self.dim

    def to_record(self) -> dict:
        return {
            "labels": [str(l) for l in self.labels],
            "field": self.field.name,
            "dim": self.dim,
            "systems": [e.to_record() for e in self.entries],
        }


def _check_commuting(ops: Sequence[HeckeMatrix]) -> None:
    for i, a in enumerate(ops):
        for b in ops[i + 1:]:
            if not a.commutes_with(b):
                raise MathDomainError(f"operators {a.label} and {b.label} do not commute")


def _split(F: Field, labels: List[OperatorLabel], mats: List[np.ndarray], k: int, found: Dict, out: List[tuple], seed: int) -> None:
    """Recursive splitting into joint generalized eigenspaces"""
    dim = mats[0].shape[0] if mats else 0
    if dim == 0:
        return
    if k == len(labels):
        out.append((dict(found), mats))
        return
    A = mats[k]
    for f, e in factor(F, char_poly(F, A), seed):
        W = F.left_kernel_basis(eval_matrix(F, poly_pow(F, f, e), A))
        W, piv = F.row_basis(W)
        restricted = [F.restrict(M, W, piv) for M in mats]
        found[labels[k]] = f
        _split(F, labels, restricted, k + 1, found, out, seed)
        del found[labels[k]]


def _leaf_system(F: Field, factors: Dict[OperatorLabel, Polynomial], extension_degree: int) -> EigenSystem:
    values = {l: F.neg(f[1]) for l, f in factors.items()}
    return EigenSystem(F, values, {}, extension_degree)


def _lift(E: Field, M: np.ndarray, embed) -> np.ndarray:
    out = E.zeros(*M.shape)
    for idx in np.ndindex(M.shape):
        out[idx] = embed(M[idx])
    return out


def eigensystems(space, ops: Sequence[HeckeMatrix], seed: int = 0) -> EigenReport:
    """Split the space under the commuting operators.

    Over finite fields, joint spaces where some operator has only
    irreducible factors of degree > 1 are split again over the smallest
    extension containing their roots.
    """
    ops = list(ops)
    if space is not None:
        F, dim = space.field, space.dim
    elif ops:
        F, dim = ops[0].field, ops[0].dim
    else:
        raise ValidationError("eigensystems needs a space or at least one operator")
    labels = [op.label for op in ops]
    report = EigenReport(labels, F, dim)
    if dim == 0:
        return report
    _check_commuting(ops)
    leaves: List[tuple] = []
    if not ops:
        report.entries.append(ReportEntry({}, F, dim, EigenSystem(F, {})))
        return report
    _split(F, labels, [np.asarray(op.matrix, dtype=F.dtype) for op in ops], 0, {}, leaves, seed)
    for factors, mats in leaves:
        entry = ReportEntry(factors, F, mats[0].shape[0])
        r = entry.degree
        if r == 1:
            entry.system = _leaf_system(F, factors, F.degree)
            report.entries.append(entry)
        elif F.is_finite:
            E = finite_field(F.characteristic, F.degree * r)
            embed = field_embeddings(F, E)[0]
            lifted = [_lift(E, np.asarray(M), embed) for M in mats]
            sub: List[tuple] = []
            _split(E, labels, lifted, 0, {}, sub, seed)
            for sub_factors, sub_mats in sub:
                report.entries.append(ReportEntry(sub_factors, E, sub_mats[0].shape[0], _leaf_system(E, sub_factors, E.degree)))
        else:
            report.entries.append(entry)
    report.entries.sort(key=_entry_key)
    logger.debug(f"Eigensystems over {F.name}: {len(report.entries)} joint spaces in dimension {dim}")
    return report


def _entry_key(e: ReportEntry):
    F = e.field
    return (e.degree, F.degree, [(str(l), [F.sort_key(c) for c in f]) for l, f in sorted(e.factors.items())])


def system_matches(phi: EigenSystem, system: EigenSystem, labels: Optional[Sequence[OperatorLabel]] = None) -> bool:
    """phi and system agree on the labels under some embedding into a common field.

    The system's field is fixed in the common extension through one
    embedding; every embedding of phi's field is tried, with all labels
    matched jointly.
    """
    labels = list(labels) if labels is not None else phi.labels
    if any(l not in system.values or l not in phi.values for l in labels):
        return False
    Fa, Fb = phi.field, system.field
    if Fa is Fb or Fa == Fb:
        return all(phi.values[l] == system.values[l] for l in labels)
    if Fa.characteristic != Fb.characteristic:
        return False
    if Fa.characteristic == 0:
        return all(phi.values[l] == system.values[l] for l in labels)
    E = finite_field(Fa.characteristic, lcm(Fa.degree, Fb.degree))
    fixed = field_embeddings(Fb, E)[0]
    targets = {l: fixed(system.values[l]) for l in labels}
    return any(all(sigma(phi.values[l]) == targets[l] for l in labels) for sigma in field_embeddings(Fa, E))


def occurs_in(phi: EigenSystem, space, ops: Optional[Sequence[HeckeMatrix]] = None, seed: int = 0) -> bool:
    """Some system of the space under ops agrees with phi on all of phi's labels.

    ``space`` may be a report already computed by eigensystems, in which
    case ops is ignored.
    """
    report = space if isinstance(space, EigenReport) else eigensystems(space, ops or [], seed)
    missing = [l for l in phi.labels if l not in report.labels]
    if missing:
        raise ValidationError(f"labels {[str(l) for l in missing]} are not among the operators")
    return any(system_matches(phi, s) for s in report.systems)
