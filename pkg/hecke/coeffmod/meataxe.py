"""Submodule search, composition factors and Hom spaces for modules over finite fields.

Modules are given by the matrices of a generating set of the acting group.
A random element A of the group algebra is tried against each irreducible
factor f of its characteristic polynomial: a vector in ker f(A) spinning to a
proper subspace splits the module, and when ker f(A) has dimension deg f and
both spins (for the module and its dual) are full, the module is irreducible.
"""

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from hecke.constants import DEFAULT_SEED, MEATAXE_ATTEMPTS, logger
from hecke.errors import InternalError, ValidationError
from hecke.exact.fields import ExtensionField, Field
from hecke.exact.poly import char_poly, degree, eval_matrix, factor

Gens = List[np.ndarray]


@dataclass
class Constituent:
    """An irreducible composition factor with its multiplicity"""

    generators: Gens
    multiplicity: int

    @property
    def dim(self) -> int:
        return self.generators[0].shape[0]


def random_scalar(F: Field, rng: random.Random):
    if isinstance(F, ExtensionField):
        return F.element(rng.randrange(F.order))
    return F.convert(rng.randrange(F.order))


def _stack(F: Field, blocks: Sequence[np.ndarray], ncols: int) -> np.ndarray:
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        return F.zeros(0, ncols)
    return np.concatenate([np.asarray(b, dtype=F.dtype) for b in blocks], axis=0)


def spin(F: Field, gens: Gens, vectors: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Echelon basis of the smallest invariant subspace containing the vectors"""
    n = gens[0].shape[0]
    B, piv = F.row_basis(np.asarray(vectors, dtype=F.dtype).reshape(-1, n))
    frontier = B
    while frontier.shape[0]:
        images = _stack(F, [F.matmul(frontier, g) for g in gens], n)
        reduced = F.reduce_rows(images, B, piv)
        if F.is_zero_matrix(reduced):
            break
        frontier = F.row_basis(reduced)[0]
        B, piv = F.row_basis(_stack(F, [B, frontier], n))
    return B, piv


def submodule_action(F: Field, gens: Gens, B: np.ndarray, piv: List[int]) -> Gens:
    return [F.restrict(g, B, piv) for g in gens]


def quotient_action(F: Field, gens: Gens, B: np.ndarray, piv: List[int]) -> Gens:
    n = gens[0].shape[0]
    rest = [c for c in range(n) if c not in set(piv)]
    E = F.identity(n)[rest]
    return [np.array(F.reduce_rows(F.matmul(E, g), B, piv)[:, rest], dtype=F.dtype) for g in gens]


def _algebra_element(F: Field, gens: Gens, rng: random.Random) -> np.ndarray:
    pool = list(gens)
    for _ in range(2):
        pool.append(F.matmul(rng.choice(pool), rng.choice(pool)))
    A = F.zeros(*gens[0].shape)
    for g in pool:
        A = F.madd(A, F.mscale(random_scalar(F, rng), g))
    return A


def find_submodule(F: Field, gens: Gens, rng: random.Random) -> Optional[Tuple[np.ndarray, List[int]]]:
    """A proper nonzero submodule as (echelon basis, pivots), or None when irreducible"""
    if not F.is_finite:
        raise ValidationError("constituent analysis runs over finite fields only")
    n = gens[0].shape[0]
    if n <= 1:
        return None
    dual = [np.array(g.T, dtype=F.dtype) for g in gens]
    for _ in range(MEATAXE_ATTEMPTS):
        A = _algebra_element(F, gens, rng)
        for f, _mult in factor(F, char_poly(F, A)):
            fA = eval_matrix(F, f, A)
            null = F.left_kernel_basis(fA)
            if null.shape[0] == 0:
                continue
            B, piv = spin(F, gens, null[:1])
            if len(piv) < n:
                return B, piv
            null_dual = F.left_kernel_basis(np.array(fA.T, dtype=F.dtype))
            Bt, pt = spin(F, dual, null_dual[:1])
            if len(pt) < n:
                # annihilator of an invariant subspace of the dual
                U = F.left_kernel_basis(np.array(Bt.T, dtype=F.dtype))
                return F.row_basis(U)
            if null.shape[0] == degree(f):
                return None
    raise InternalError(f"submodule search did not settle after {MEATAXE_ATTEMPTS} attempts")


def is_irreducible(F: Field, gens: Gens, seed: int = DEFAULT_SEED) -> bool:
    return find_submodule(F, gens, random.Random(seed)) is None


def _kron(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    m, n = A.shape
    p, q = B.shape
    out = F.zeros(m * p, n * q)
    for i in range(m):
        for k in range(n):
            if not F.is_zero(A[i, k]):
                out[i * p:(i + 1) * p, k * q:(k + 1) * q] = F.mscale(A[i, k], B)
    return out


def hom_space(F: Field, source: Gens, target: Gens) -> List[np.ndarray]:
    """Basis of module maps X (v -> v X) with source_g X = X target_g for every generator"""
    a, b = source[0].shape[0], target[0].shape[0]
    eqs = [
        F.msub(_kron(F, s, F.identity(b)), _kron(F, F.identity(a), np.array(t.T, dtype=F.dtype)))
        for s, t in zip(source, target)
    ]
    K = F.kernel_basis(_stack(F, eqs, a * b))
    return [np.array(row.reshape(a, b), dtype=F.dtype) for row in K]


def hom_dim(F: Field, source: Gens, target: Gens) -> int:
    return len(hom_space(F, source, target))


def composition_factors(F: Field, gens: Gens, seed: int = DEFAULT_SEED) -> List[Gens]:
    """Irreducible composition factors, with repetition, by recursive splitting"""
    rng = random.Random(seed)
    n = gens[0].shape[0] if gens else 0
    if n == 0:
        return []
    stack, out = [gens], []
    while stack:
        g = stack.pop()
        split = find_submodule(F, g, rng)
        if split is None:
            out.append(g)
            continue
        B, piv = split
        stack.append(quotient_action(F, g, B, piv))
        stack.append(submodule_action(F, g, B, piv))
    return out


def constituents(F: Field, gens: Gens, seed: int = DEFAULT_SEED) -> List[Constituent]:
    """Semisimplification: isomorphism classes of composition factors with multiplicities"""
    classes: List[Constituent] = []
    for g in composition_factors(F, gens, seed):
        for c in classes:
            if c.dim == g[0].shape[0] and hom_dim(F, c.generators, g) > 0:
                c.multiplicity += 1
                break
        else:
            classes.append(Constituent(g, 1))
    classes.sort(key=lambda c: (c.dim, -c.multiplicity))
    logger.debug(f"Constituents: {[(c.dim, c.multiplicity) for c in classes]}")
    return classes


def socle_dim(F: Field, gens: Gens, seed: int = DEFAULT_SEED) -> int:
    """dim of the socle: sum over simple S of dim Hom(S, M) * dim S / dim End(S)"""
    total = 0
    for c in constituents(F, gens, seed):
        total += hom_dim(F, c.generators, gens) * c.dim // hom_dim(F, c.generators, c.generators)
    return total


def is_semisimple(F: Field, gens: Gens, seed: int = DEFAULT_SEED) -> bool:
    return socle_dim(F, gens, seed) == gens[0].shape[0]


def random_spin_check(F: Field, gens: Gens, trials: int = 1000, seed: int = DEFAULT_SEED) -> bool:
    """No random nonzero vector spins to a proper subspace"""
    rng = random.Random(seed)
    n = gens[0].shape[0]
    for _ in range(trials):
        v = F.matrix([[random_scalar(F, rng) for _ in range(n)]])
        if F.is_zero_matrix(v):
            continue
        _, piv = spin(F, gens, v)
        if len(piv) < n:
            return False
    return True
