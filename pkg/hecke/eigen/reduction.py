"""Search for eigensystems with one-dimensional coefficients.

An eigensystem occurring in H^i(Gamma', V) also occurs in some H^j(Gamma_target, F(chi))
with j <= i and chi a character of {+1, -1} x (Z/M)*. The search runs over every
(j, chi), keeps all matches and returns the first in enumeration order.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import primefactors

from hecke.constants import DEFAULT_LABEL_PRIMES, MAX_WORKERS, CohomPath, ReductionMode, logger
from hecke.errors import MathDomainError, ValidationError
from hecke.exact.fields import Field, common_field
from hecke.modgroup.groups import GroupDescriptor
from hecke.algebra.grading import EigenSystem, OperatorLabel
from hecke.coeffmod.characters import Character, all_characters, character_field
from hecke.coeffmod.modules import CharacterModule, CoefficientModule
from hecke.cohom.action import hecke_matrix
from hecke.cohom.space import cohomology
from hecke.eigen.report import EigenReport, eigensystems, system_matches

NO_WITNESS = (
    "no witness found: this signals an implementation bug or an insufficient label set P, "
    "since a witness is guaranteed to exist"
)


def default_labels(*levels: int, primes: Optional[Sequence[int]] = None) -> List[OperatorLabel]:
    """T_p for the configured primes, leaving out primes dividing any level"""
    primes = DEFAULT_LABEL_PRIMES if primes is None else primes
    bad = set()
    for N in levels:
        bad.update(primefactors(N))
    return [OperatorLabel(p) for p in primes if p not in bad]


@dataclass
class ReductionTarget:
    """Target group and character modulus of a reduction search"""

    mode: ReductionMode
    group: GroupDescriptor
    modulus: int
    ell: Optional[int] = None

    @classmethod
    def char0(cls, N: int, modulus: Optional[int] = None) -> "ReductionTarget":
        return cls(ReductionMode.CHAR0, GroupDescriptor.gamma_diag(N), N if modulus is None else modulus)

    @classmethod
    def charl(cls, N: int, ell: int, nu: int = 1, modulus: Optional[int] = None) -> "ReductionTarget":
        L = ell**nu
        return cls(ReductionMode.CHARL, GroupDescriptor.gamma1_upper(N * L), L if modulus is None else modulus, ell)

    def to_record(self) -> dict:
        return {"mode": self.mode.value, "group": self.group.to_record(), "modulus": self.modulus, "ell": self.ell}


@dataclass(frozen=True)
class Candidate:
    index: int
    degree: int
    chi: Character


@dataclass
class ReductionWitness:
    source: dict
    phi: EigenSystem
    labels: List[OperatorLabel]
    target: ReductionTarget
    degree: int
    chi: Character
    matched: EigenSystem
    field: Field
    candidates: int
    transcript: List[dict] = dc_field(default_factory=list)

    @property
    def verified(self) -> bool:
        return bool(self.transcript) and all(t["match"] for t in self.transcript)

    def to_record(self) -> dict:
        """Self-contained certificate: inputs, witness and the re-verification transcript"""
        F = self.phi.field
        return {
            "source": self.source,
            "eigensystem": {str(l): F.to_str(self.phi.values[l]) for l in self.labels},
            "labels": [str(l) for l in self.labels],
            "target": self.target.to_record(),
            "witness": {
                "degree": self.degree,
                "character": self.chi.to_record(),
                "module": CharacterModule(self.chi).describe(),
                "eigensystem": self.matched.to_record(),
                "field": self.field.name,
                "extension_degree": self.matched.extension_degree,
            },
            "candidates_searched": self.candidates,
            "verification": self.transcript,
            "verified": self.verified,
        }


class WitnessSearch:
    """Exhaustive (j, chi) search against a fixed target.

    Candidate reports are cached, so many eigensystems from one source space
    share the cohomology computations.
    """

    def __init__(
        self,
        target: ReductionTarget,
        field: Field,
        max_degree: int,
        labels: Sequence[OperatorLabel],
        path: CohomPath = CohomPath.AMBIENT,
        jobs: int = MAX_WORKERS,
        seed: int = 0,
    ):
        if max_degree not in (0, 1):
            raise ValidationError(f"source degree must be 0 or 1, got {max_degree}")
        if target.ell is not None and field.characteristic != target.ell:
            raise ValidationError(f"field {field.name} does not have characteristic {target.ell}")
        for l in labels:
            if gcd(l.det, target.group.level) != 1:
                raise MathDomainError("determinant not prime to level")
        self.target = target
        self.labels = sorted(labels)
        if not self.labels:
            raise ValidationError("the label set P is empty")
        self.field = common_field(field, character_field(target.modulus, field.characteristic))
        self.path = CohomPath(path)
        self.jobs = max(1, jobs)
        self.seed = seed
        chars = all_characters(target.modulus, self.field)
        self.candidates = [
            Candidate(len(chars) * j + k, j, chi) for j in range(max_degree + 1) for k, chi in enumerate(chars)
        ]
        self._reports: Dict[int, EigenReport] = {}

    def compute(self, candidate: Candidate) -> EigenReport:
        space = cohomology(self.target.group, CharacterModule(candidate.chi), candidate.degree, self.path)
        ops = [hecke_matrix(space, l) for l in self.labels]
        return eigensystems(space, ops, self.seed)

    def report(self, candidate: Candidate) -> EigenReport:
        if candidate.index not in self._reports:
            self._reports[candidate.index] = self.compute(candidate)
        return self._reports[candidate.index]

    def prepare(self) -> None:
        """Fill the report cache, in parallel when more than one worker is allowed"""
        todo = [c for c in self.candidates if c.index not in self._reports]
        if self.jobs == 1 or len(todo) < 2:
            for c in todo:
                self.report(c)
            return
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            for c, rep in zip(todo, pool.map(self.compute, todo)):
                self._reports[c.index] = rep

    def matches(self, phi: EigenSystem) -> List[Tuple[Candidate, EigenSystem]]:
        self.prepare()
        out = []
        for c in self.candidates:
            for s in self.report(c).systems:
                if system_matches(phi, s, self.labels):
                    logger.debug(f"H^{c.degree} with {c.chi} matches on {[str(l) for l in self.labels]}")
                    out.append((c, s))
                    break
        return out

    def verify(self, phi: EigenSystem, candidate: Candidate) -> Tuple[List[dict], Optional[EigenSystem]]:
        """Recompute the candidate from scratch and record the value comparison per label"""
        report = self.compute(candidate)
        F = phi.field
        for s in report.systems:
            if system_matches(phi, s, self.labels):
                transcript = [
                    {
                        "label": str(l),
                        "expected": F.to_str(phi.values[l]),
                        "found": s.field.to_str(s.values[l]),
                        "match": True,
                    }
                    for l in self.labels
                ]
                return transcript, s
        return [{"label": str(l), "expected": F.to_str(phi.values[l]), "found": None, "match": False} for l in self.labels], None

    def find(self, phi: EigenSystem, source: Optional[dict] = None) -> "ReductionWitness":
        missing = [str(l) for l in self.labels if l not in phi.values]
        if missing:
            raise ValidationError(f"eigensystem has no value for {missing}")
        found = self.matches(phi)
        if not found:
            raise MathDomainError(NO_WITNESS)
        candidate, _ = min(found, key=lambda cs: cs[0].index)
        transcript, matched = self.verify(phi, candidate)
        if matched is None:
            raise MathDomainError(NO_WITNESS)
        logger.info(f"Witness in H^{candidate.degree}({self.target.group.name}) with {candidate.chi}")
        return ReductionWitness(
            source or {},
            phi.restrict(self.labels),
            self.labels,
            self.target,
            candidate.degree,
            candidate.chi,
            matched,
            self.field,
            len(self.candidates),
            transcript,
        )


def _check_source(module: CoefficientModule, target: ReductionTarget) -> None:
    """Char 0 needs an admissible module; char l also accepts direct modules over F_l, which act through reduction mod l"""
    if module.is_admissible:
        return
    if target.mode == ReductionMode.CHARL and module.field.characteristic == target.ell:
        return
    raise ValidationError(f"module {module.describe()} does not act through a finite quotient")


def _source_record(group: GroupDescriptor, module: CoefficientModule, degree: int) -> dict:
    return {"group": group.to_record(), "module": module.describe(), "degree": degree}


def reduce_to_one_dim(
    phi: EigenSystem,
    group: GroupDescriptor,
    module: CoefficientModule,
    degree: int,
    target: ReductionTarget,
    labels: Optional[Sequence[OperatorLabel]] = None,
    path: CohomPath = CohomPath.AMBIENT,
    jobs: int = MAX_WORKERS,
    seed: int = 0,
) -> ReductionWitness:
    """A witness (j <= degree, chi) for phi on the labels"""
    _check_source(module, target)
    if target.mode == ReductionMode.CHARL and target.group.level % group.level:
        raise ValidationError(f"target level {target.group.level} is not a multiple of the source level {group.level}")
    labels = list(labels) if labels is not None else default_labels(group.level, target.group.level)
    search = WitnessSearch(target, phi.field, degree, labels, path, jobs, seed)
    return search.find(phi, _source_record(group, module, degree))


def reduce_space(
    group: GroupDescriptor,
    module: CoefficientModule,
    degree: int,
    target: ReductionTarget,
    labels: Optional[Sequence[OperatorLabel]] = None,
    path: CohomPath = CohomPath.AMBIENT,
    jobs: int = MAX_WORKERS,
    seed: int = 0,
) -> Tuple[EigenReport, List[ReductionWitness]]:
    """Split H^degree(group, module) under the labels and find a witness for every split system"""
    _check_source(module, target)
    labels = list(labels) if labels is not None else default_labels(group.level, target.group.level)
    space = cohomology(group, module, degree, path)
    report = eigensystems(space, [hecke_matrix(space, l) for l in labels], seed)
    searches: Dict[str, WitnessSearch] = {}
    witnesses = []
    for entry in report.entries:
        if entry.system is None:
            logger.warning(f"Skipping a non-split system of degree {entry.degree} over {entry.field.name}")
            continue
        phi = entry.system
        if phi.field.name not in searches:
            searches[phi.field.name] = WitnessSearch(target, phi.field, degree, labels, path, jobs, seed)
        witnesses.append(searches[phi.field.name].find(phi, _source_record(group, module, degree)))
    logger.info(f"Found {len(witnesses)} witnesses for {len(report.entries)} systems of {space.base_module.describe()}")
    return report, witnesses
