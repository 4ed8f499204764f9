"""Command handlers: one per CLI command, each returning the records it emits"""

from math import gcd
from typing import Callable, Dict, List

from hecke.constants import ReductionMode, logger
from hecke.errors import ValidationError
from hecke.modgroup.groups import GroupDescriptor
from hecke.algebra.cosets import decompose, degree_formula, hecke_tp, series_check
from hecke.algebra.grading import OperatorLabel
from hecke.coeffmod.lemmas import check_all
from hecke.cohom.action import hecke_matrix
from hecke.cohom.space import CohomSpace, cohomology
from hecke.eigen.reduction import ReductionTarget, reduce_space
from hecke.eigen.report import eigensystems
from hecke.schema_utils import parse_group, parse_labels, parse_matrix, parse_module
from hecke.selftest import run_selftest

from app.models import (
    CheckRecord,
    CosetRecord,
    EigenReportRecord,
    HeckeMatrixRecord,
    JobConfig,
    WitnessCertificate,
)


def _group(cfg: JobConfig) -> GroupDescriptor:
    g = cfg.group
    return parse_group(g.kind.value, g.level, g.sign.value, g.generators, g.n)


def _space(cfg: JobConfig) -> CohomSpace:
    return cohomology(_group(cfg), parse_module(cfg.module), cfg.degree, cfg.path)


def _labels(cfg: JobConfig, level: int) -> List[OperatorLabel]:
    """Configured labels, leaving out those whose determinant shares a factor with the level"""
    labels = parse_labels(cfg.labels)
    kept = [l for l in labels if gcd(l.det, level) == 1]
    if len(kept) != len(labels):
        logger.warning(f"Dropping labels {[str(l) for l in labels if l not in kept]} at level {level}")
    return kept


def cmd_decompose(cfg: JobConfig) -> List[Dict]:
    """Right cosets of a double coset"""
    group = _group(cfg)
    if cfg.delta is not None:
        T = decompose(group, parse_matrix(cfg.delta), group)
    elif cfg.p is not None:
        T = hecke_tp(cfg.p, cfg.m, group)
    else:
        raise ValidationError("decompose needs --p or --delta")
    return [CosetRecord(index=i, **r).model_dump(mode="json") for i, r in enumerate(T.to_records())]


def cmd_hecke_matrix(cfg: JobConfig) -> List[Dict]:
    space = _space(cfg)
    if cfg.p is not None:
        label = OperatorLabel(cfg.p, cfg.m)
    else:
        labels = parse_labels(cfg.labels)
        if not labels:
            raise ValidationError("hecke-matrix needs --p or a label")
        label = labels[0]
    record = hecke_matrix(space, label).to_record()
    return [HeckeMatrixRecord(space=space.to_record(), **record).model_dump(mode="json")]


def cmd_eigensystems(cfg: JobConfig) -> List[Dict]:
    space = _space(cfg)
    labels = _labels(cfg, space.source_group.level)
    report = eigensystems(space, [hecke_matrix(space, l) for l in labels], cfg.seed)
    return [EigenReportRecord(space=space.to_record(), **report.to_record()).model_dump(mode="json")]


def cmd_degree_check(cfg: JobConfig) -> List[Dict]:
    """Coset counts of T_p^(m) against the closed formula"""
    group = GroupDescriptor.full(n=cfg.n)
    records = []
    for p in cfg.primes:
        for m in range(1, cfg.n + 1):
            found, expected = hecke_tp(p, m, group).degree, degree_formula(p, m, cfg.n)
            records.append(
                CheckRecord(
                    name=f"deg T{p}^({m}) n={cfg.n}", passed=found == expected, detail=f"{found} cosets, formula {expected}"
                ).model_dump(mode="json")
            )
    return records


def cmd_series_check(cfg: JobConfig) -> List[Dict]:
    k_max = 2 if cfg.n == 2 else 1
    return [
        CheckRecord(
            name=f"series n={cfg.n} p={p}", passed=series_check(p, cfg.n, k_max), detail=f"coefficients up to X^{k_max}"
        ).model_dump(mode="json")
        for p in cfg.primes
    ]


def _reduction_target(cfg: JobConfig, group: GroupDescriptor) -> ReductionTarget:
    r = cfg.reduction
    if r.mode == ReductionMode.CHARL:
        if r.ell is None:
            raise ValidationError("char l reduction needs --ell")
        return ReductionTarget.charl(r.target_level or 1, r.ell, r.nu, r.modulus)
    return ReductionTarget.char0(r.target_level or group.level, r.modulus)


def cmd_reduce(cfg: JobConfig) -> List[Dict]:
    """Witnesses with one-dimensional coefficients for every eigensystem of the source space"""
    group = _group(cfg)
    target = _reduction_target(cfg, group)
    labels = _labels(cfg, group.level * target.group.level)
    module = parse_module(cfg.module)
    report, witnesses = reduce_space(group, module, cfg.degree, target, labels, cfg.path, cfg.jobs, cfg.seed)
    source = {"group": group.to_record(), "module": module.to_record(), "degree": cfg.degree, "path": cfg.path.value}
    records = [EigenReportRecord(space=source, **report.to_record()).model_dump(mode="json")]
    records += [WitnessCertificate(**w.to_record()).model_dump(mode="json") for w in witnesses]
    return records


def cmd_rep_check(cfg: JobConfig) -> List[Dict]:
    return [CheckRecord(name=r.name, passed=r.passed, detail=r.detail).model_dump(mode="json") for r in check_all(cfg.seed)]


def cmd_selftest(cfg: JobConfig) -> List[Dict]:
    return [CheckRecord(**r.to_record()).model_dump(mode="json") for r in run_selftest(cfg.seed)]


def cmd_schema(cfg: JobConfig) -> List[Dict]:
    return [{"record": "schema", "schema": JobConfig.model_json_schema()}]


COMMANDS: Dict[str, Callable[[JobConfig], List[Dict]]] = {
    "decompose": cmd_decompose,
    "hecke-matrix": cmd_hecke_matrix,
    "eigensystems": cmd_eigensystems,
    "degree-check": cmd_degree_check,
    "series-check": cmd_series_check,
    "reduce": cmd_reduce,
    "rep-check": cmd_rep_check,
    "selftest": cmd_selftest,
    "schema": cmd_schema,
}
