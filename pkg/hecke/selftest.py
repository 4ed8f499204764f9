"""Invariant suite: degree formulas, series identities, oracles, Hecke-module structure and lemmas"""

import time
from dataclasses import dataclass
from typing import Callable, List, Tuple

from hecke.constants import DEFAULT_SEED, FULL_TESTS, CohomPath, logger
from hecke.exact.fields import QQ_FIELD, finite_field
from hecke.exact.poly import from_ints, poly_eval, poly_pow, poly_rem
from hecke.modgroup.groups import GroupDescriptor
from hecke.algebra.cosets import degree_formula, hecke_tp, series_check
from hecke.algebra.grading import (
    ClassCharacter,
    EigenSystem,
    OperatorLabel,
    SyntheticClassGroup,
    extract_twist,
    twist_eigensystem,
)
from hecke.coeffmod.lemmas import check_all
from hecke.coeffmod.modules import SymPowerModule, trivial_module
from hecke.cohom.action import coboundaries_preserved, hecke_matrix, hecke_operator
from hecke.cohom.space import cohomology
from hecke.eigen.reduction import ReductionTarget, reduce_space
from hecke.eigen.report import eigensystems, occurs_in
from hecke import oracle

T2, T3 = OperatorLabel(2), OperatorLabel(3)


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str

    def to_record(self) -> dict:
        return {"name": self.name, "passed": self.passed, "seconds": f"{self.seconds:.3f}", "detail": self.detail}


def check_degrees() -> Tuple[bool, str]:
    bad = []
    cases = [(2, m) for m in (1, 2)] + [(3, m) for m in (1, 2, 3)]
    for n, m in cases:
        group = GroupDescriptor.full(n=n)
        for p in (2, 3, 5, 7):
            if hecke_tp(p, m, group).degree != degree_formula(p, m, n):
                bad.append((n, m, p))
    return not bad, f"{len(cases) * 4} cases, mismatches {bad}"


def check_series() -> Tuple[bool, str]:
    results = {(n, p): series_check(p, n, 2 if n == 2 else 1) for n in (2, 3) for p in (2, 3)}
    return all(results.values()), ", ".join(f"n={n} p={p}: {ok}" for (n, p), ok in results.items())


def check_tau() -> Tuple[bool, str]:
    space = cohomology(GroupDescriptor.full(), SymPowerModule(10), 1)
    cp = hecke_matrix(space, T2).char_poly()
    t2 = oracle.tau(2)
    square = poly_pow(QQ_FIELD, from_ints(QQ_FIELD, [1, -t2]), 2)
    divisible = not any(poly_rem(QQ_FIELD, cp, square))
    eisenstein = poly_eval(QQ_FIELD, cp, oracle.eisenstein_eigenvalue(2, 12)) == 0
    dim_ok = space.dim == oracle.dim_h1_level1(12)
    return divisible and eisenstein and dim_ok, f"dim {space.dim}, (x - {t2})^2 divides: {divisible}, Eisenstein root: {eisenstein}"


def check_hecke_module() -> Tuple[bool, str]:
    spaces = [
        cohomology(GroupDescriptor.full(), SymPowerModule(10), 1),
        cohomology(GroupDescriptor.gamma0(5), trivial_module(QQ_FIELD), 1),
        cohomology(GroupDescriptor.gamma0(3), SymPowerModule(2), 1, CohomPath.DIRECT),
    ]
    failures = []
    for space in spaces:
        name = f"{space.source_group.name} {space.base_module.describe()}"
        a, b = hecke_matrix(space, T2), hecke_matrix(space, OperatorLabel(7))
        if not a.commutes_with(b):
            failures.append(f"{name}: T2 T7 != T7 T2")
        if not coboundaries_preserved(hecke_operator(T2, space), space):
            failures.append(f"{name}: coboundaries not preserved")
    return not failures, f"{len(spaces)} spaces, failures {failures}"


def check_shapiro() -> Tuple[bool, str]:
    group = GroupDescriptor.gamma0(5)
    module = trivial_module(QQ_FIELD)
    ambient = cohomology(group, module, 1, CohomPath.AMBIENT)
    direct = cohomology(group, module, 1, CohomPath.DIRECT)
    a = hecke_matrix(ambient, T2).char_poly()
    b = hecke_matrix(direct, T2).char_poly()
    return a == b and ambient.dim == direct.dim, f"dims {ambient.dim}/{direct.dim}, char polys agree: {a == b}"


def check_lemmas(seed: int) -> Tuple[bool, str]:
    results = check_all(seed)
    return all(r.passed for r in results), "; ".join(f"{r.name}: {r.detail}" for r in results)


def check_twists() -> Tuple[bool, str]:
    F = finite_field(7)
    classes = SyntheticClassGroup((3,), {2: (1,), 3: (2,), 5: (0,)})
    phi = EigenSystem(F, {T2: F.convert(3), T3: F.convert(5), OperatorLabel(5): F.convert(1)})
    ok = True
    for chi in ClassCharacter.all(classes, F):
        psi = twist_eigensystem(chi, phi)
        ok = ok and extract_twist(psi, phi, classes) == chi
        for eta in ClassCharacter.all(classes, F):
            composed = twist_eigensystem(eta, psi)
            ok = ok and composed.agrees_with(twist_eigensystem(eta * chi, phi))
    return ok, f"{classes.order} characters over {F.name}"


def check_mod5_tau() -> Tuple[bool, str]:
    F = finite_field(5)
    space = cohomology(GroupDescriptor.full(), SymPowerModule(10, 0, F), 1)
    report = eigensystems(space, [hecke_matrix(space, T2), hecke_matrix(space, T3)])
    phi = EigenSystem(F, {T2: F.convert(oracle.tau(2)), T3: F.convert(oracle.tau(3))})
    found = occurs_in(phi, report)
    return found and report.is_complete(), f"{len(report.entries)} systems, reduced tau system occurs: {found}"


def check_flagship(seed: int) -> Tuple[bool, str]:
    F = finite_field(5)
    group = GroupDescriptor.gamma1_upper(5)
    report, witnesses = reduce_space(group, SymPowerModule(10, 0, F), 1, ReductionTarget.charl(1, 5), seed=seed)
    ok = len(witnesses) == len(report.systems) and all(w.verified for w in witnesses)
    return ok, f"{len(witnesses)} witnesses for {len(report.entries)} systems"


def selftest_checks(seed: int = DEFAULT_SEED, full: bool = FULL_TESTS) -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
    checks = [
        ("degree formula", check_degrees),
        ("series identity", check_series),
        ("tau and Eisenstein", check_tau),
        ("Hecke-module structure", check_hecke_module),
        ("Shapiro two paths", check_shapiro),
        ("representation lemmas", lambda: check_lemmas(seed)),
        ("twist machinery", check_twists),
        ("mod 5 tau occurrence", check_mod5_tau),
    ]
    if full:
        checks.append(("mod 5 reduction witnesses", lambda: check_flagship(seed)))
    return checks


def run_selftest(seed: int = DEFAULT_SEED, full: bool = FULL_TESTS) -> List[CheckResult]:
    results = []
    for name, check in selftest_checks(seed, full):
        start = time.perf_counter()
        try:
            passed, detail = check()
        except Exception as e:
            logger.exception(f"Self-test check '{name}' raised")
            passed, detail = False, f"{type(e).__name__}: {e}"
        elapsed = time.perf_counter() - start
        logger.info(f"{'PASS' if passed else 'FAIL'} {name} ({elapsed:.2f}s)")
        results.append(CheckResult(name, passed, elapsed, detail))
    return results
