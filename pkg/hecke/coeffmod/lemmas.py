"""Brute-force checks of the characteristic-l representation facts on small finite groups"""

from dataclasses import dataclass
from typing import Callable, Hashable, List, Sequence

import numpy as np

from hecke.constants import DEFAULT_SEED, logger
from hecke.errors import MathDomainError
from hecke.exact.fields import Field, finite_field
from hecke.finite_groups import (
    FiniteGroup,
    ModMat,
    det_mod,
    generators_of,
    matrix_group,
    permutation_matrices,
    reduction_kernel,
)
from hecke.coeffmod.meataxe import Constituent, Gens, constituents, is_semisimple


def _images(F: Field, group: FiniteGroup, gens: Gens) -> List[np.ndarray]:
    return group.extend_representation(gens, F.matmul, F.identity(gens[0].shape[0]))


def factors_through(
    F: Field, group: FiniteGroup, gens: Gens, invariant: Callable[[Hashable], Hashable], seed: int = DEFAULT_SEED
) -> bool:
    """Every constituent is constant on the fibres of ``invariant``"""
    for c in constituents(F, gens, seed):
        seen = {}
        for x, img in zip(group.elements, _images(F, group, c.generators)):
            key = invariant(x)
            if key in seen and not F.equal(seen[key], img):
                return False
            seen.setdefault(key, img)
    return True


def kernel_acts_trivially(F: Field, group: FiniteGroup, gens: Gens, kernel: Sequence[Hashable], seed: int = DEFAULT_SEED) -> bool:
    """Every constituent sends each element of ``kernel`` to the identity"""
    kernel = set(kernel)
    for c in constituents(F, gens, seed):
        one = F.identity(c.dim)
        for x, img in zip(group.elements, _images(F, group, c.generators)):
            if x in kernel and not F.equal(img, one):
                return False
    return True


def restriction_semisimple(F: Field, group: FiniteGroup, gens: Gens, normal: Sequence[Hashable], seed: int = DEFAULT_SEED) -> bool:
    """Each irreducible constituent stays semisimple on the normal subgroup"""
    normal = list(normal)
    if not group.is_normal(normal):
        raise MathDomainError("the subgroup is not normal")
    sub_gens = generators_of(normal, group.mul, group.identity) or [group.identity]
    positions = [group.index(h) for h in sub_gens]
    for c in constituents(F, gens, seed):
        images = _images(F, group, c.generators)
        if not is_semisimple(F, [images[k] for k in positions], seed):
            return False
    return True


# example groups and modules


def triangular_f3() -> FiniteGroup:
    """(1 *; 0 *) in GL_2(F_3), order 6"""
    return matrix_group(3, [(1, 1, 0, 1), (1, 0, 0, 2)], name="B1(F3)")


def gl2_z4() -> FiniteGroup:
    return matrix_group(4, [(1, 1, 0, 1), (1, 0, 1, 1), (1, 0, 0, 3)], name="GL2(Z/4)")


def vector_permutation_matrices(group: FiniteGroup, N: int, field: Field) -> Gens:
    """Permutation action v -> v g on row vectors of (Z/N)^2"""
    vectors = [(a, b) for a in range(N) for b in range(N)]
    index = {v: i for i, v in enumerate(vectors)}
    out = []
    for g in group.generators:
        M = field.zeros(len(vectors), len(vectors))
        for i, (a, b) in enumerate(vectors):
            w = ((a * g[0] + b * g[2]) % N, (a * g[1] + b * g[3]) % N)
            M[i, index[w]] = field.one
        out.append(M)
    return out


@dataclass
class LemmaResult:
    name: str
    passed: bool
    detail: str


def check_determinant_lemma(seed: int = DEFAULT_SEED) -> LemmaResult:
    F = finite_field(3)
    G = triangular_f3()
    gens = permutation_matrices(G, F)
    cons: List[Constituent] = constituents(F, gens, seed)
    one_dim = all(c.dim == 1 for c in cons)
    through_det = factors_through(F, G, gens, lambda x: det_mod(x, 3), seed)
    passed = one_dim and through_det and len(cons) == 2
    return LemmaResult("determinant", passed, f"{len(cons)} constituents, dims {[c.dim for c in cons]}")


def check_kernel_lemma(seed: int = DEFAULT_SEED) -> LemmaResult:
    F = finite_field(2)
    G = gl2_z4()
    gens = vector_permutation_matrices(G, 4, F)
    kernel: List[ModMat] = reduction_kernel(G.elements, 2)
    passed = G.order == 96 and len(kernel) == 16 and kernel_acts_trivially(F, G, gens, kernel, seed)
    return LemmaResult("reduction kernel", passed, f"|G| = {G.order}, |K| = {len(kernel)}")


def restriction_triples() -> List[tuple]:
    """(name, field, group, module generators, normal subgroup), all with |G| <= 48"""
    out = []
    s3 = matrix_group(2, [(1, 1, 0, 1), (0, 1, 1, 1)], name="GL2(F2)")
    a3 = [x for x in s3.elements if _order(s3, x) != 2]
    out.append(("GL2(F2) > C3, F2", finite_field(2), s3, permutation_matrices(s3, finite_field(2)), a3))
    b3 = matrix_group(3, [(1, 1, 0, 1), (2, 0, 0, 1), (1, 0, 0, 2)], name="B(F3)")
    unipotent = [x for x in b3.elements if x[0] == 1 and x[3] == 1]
    out.append(("B(F3) > U, F2", finite_field(2), b3, permutation_matrices(b3, finite_field(2)), unipotent))
    gl = matrix_group(3, [(1, 1, 0, 1), (1, 0, 1, 1), (1, 0, 0, 2)], name="GL2(F3)")
    sl = [x for x in gl.elements if det_mod(x, 3) == 1]
    F3 = finite_field(3)
    natural = [F3.matrix([[g[0], g[1]], [g[2], g[3]]]) for g in gl.generators]
    out.append(("GL2(F3) > SL2(F3), natural F3", F3, gl, natural, sl))
    out.append(("GL2(F3) > SL2(F3), F2 vectors", finite_field(2), gl, vector_permutation_matrices(gl, 3, finite_field(2)), sl))
    return out


def _order(group: FiniteGroup, x) -> int:
    k, y = 1, x
    while y != group.identity:
        y = group.mul(y, x)
        k += 1
    return k


def check_restriction_lemma(seed: int = DEFAULT_SEED) -> LemmaResult:
    failures = []
    triples = restriction_triples()
    for name, F, G, gens, H in triples:
        if not restriction_semisimple(F, G, gens, H, seed):
            failures.append(name)
        logger.debug(f"Restriction semisimplicity on {name}: {'ok' if name not in failures else 'FAILED'}")
    return LemmaResult("restriction semisimple", not failures, f"{len(triples)} triples, failures: {failures}")


def check_all(seed: int = DEFAULT_SEED) -> List[LemmaResult]:
    return [check_determinant_lemma(seed), check_kernel_lemma(seed), check_restriction_lemma(seed)]
