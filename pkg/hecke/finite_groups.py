"""Finite matrix groups over Z/N, and their products with the sign group {+1, -1}"""

from collections import deque
from math import gcd, isqrt
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from hecke.constants import MAX_FINITE_GROUP_ORDER, logger
from hecke.errors import MathDomainError, ValidationError

ModMat = Tuple[int, ...]  # row-major flattened n x n matrix over Z/N
Signed = Tuple[int, ModMat]  # (sign, image)


def _dim(a: ModMat) -> int:
    return isqrt(len(a))


def mat_mul_mod(a: ModMat, b: ModMat, N: int) -> ModMat:
    if len(a) == 4:
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return (
            (a0 * b0 + a1 * b2) % N,
            (a0 * b1 + a1 * b3) % N,
            (a2 * b0 + a3 * b2) % N,
            (a2 * b1 + a3 * b3) % N,
        )
    n = _dim(a)
    return tuple(
        sum(a[i * n + k] * b[k * n + j] for k in range(n)) % N for i in range(n) for j in range(n)
    )


def det_mod(a: ModMat, N: int) -> int:
    if len(a) == 4:
        return (a[0] * a[3] - a[1] * a[2]) % N
    if len(a) == 9:
        return (
            a[0] * (a[4] * a[8] - a[5] * a[7])
            - a[1] * (a[3] * a[8] - a[5] * a[6])
            + a[2] * (a[3] * a[7] - a[4] * a[6])
        ) % N
    raise ValidationError(f"unsupported matrix size {len(a)}")


def identity_mod(N: int, n: int = 2) -> ModMat:
    return tuple((1 if i == j else 0) % N for i in range(n) for j in range(n))


def diag_mod(N: int, *entries: int) -> ModMat:
    n = len(entries)
    return tuple((entries[i] if i == j else 0) % N for i in range(n) for j in range(n))


def mat_inv_mod(a: ModMat, N: int) -> ModMat:
    if N == 1:
        return a
    if len(a) != 4:
        raise ValidationError("inverse mod N is implemented for 2 x 2 matrices")
    d = det_mod(a, N)
    if gcd(d, N) != 1:
        raise MathDomainError(f"{a} is not invertible mod {N}")
    di = pow(d, -1, N)
    return ((a[3] * di) % N, (-a[1] * di) % N, (-a[2] * di) % N, (a[0] * di) % N)


def units_mod(N: int) -> List[int]:
    if N == 1:
        return [0]
    return [u for u in range(1, N) if gcd(u, N) == 1]


def gl2_mod(N: int) -> List[ModMat]:
    """All of GL_2(Z/N), in lexicographic order"""
    if N == 1:
        return [(0, 0, 0, 0)]
    if N**4 > 50 * MAX_FINITE_GROUP_ORDER:
        raise ValidationError(f"GL2(Z/{N}) is too large to enumerate")
    out = []
    for a in range(N):
        for b in range(N):
            for c in range(N):
                for d in range(N):
                    if gcd((a * d - b * c) % N, N) == 1:
                        out.append((a, b, c, d))
    return out


def signed_mul(N: int) -> Callable[[Signed, Signed], Signed]:
    def mul(x: Signed, y: Signed) -> Signed:
        return (x[0] * y[0], mat_mul_mod(x[1], y[1], N))

    return mul


class FiniteGroup:
    """Finite group enumerated from generators by breadth-first closure.

    Elements are hashable values; ``mul`` is the group law. The closure keeps
    for every element its BFS parent and the generator used to reach it, so
    that any right representation given on generators extends to all elements.
    """

    def __init__(
        self,
        generators: Sequence[Hashable],
        mul: Callable,
        identity: Hashable,
        max_order: int = MAX_FINITE_GROUP_ORDER,
        name: str = "G",
    ):
        self.generators = list(generators)
        self.mul = mul
        self.identity = identity
        self.name = name
        self.elements: List[Hashable] = [identity]
        self.parent: List[Optional[Tuple[int, int]]] = [None]
        self._index: Dict[Hashable, int] = {identity: 0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            x = self.elements[i]
            for k, s in enumerate(self.generators):
                y = mul(x, s)
                if y in self._index:
                    continue
                if len(self.elements) >= max_order:
                    raise ValidationError(f"group {name} exceeds {max_order} elements")
                self._index[y] = len(self.elements)
                self.elements.append(y)
                self.parent.append((i, k))
                queue.append(len(self.elements) - 1)
        logger.debug(f"Enumerated group {name} of order {len(self.elements)}")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __iter__(self):
        return iter(self.elements)

    def index(self, x) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise MathDomainError(f"{x} is not an element of {self.name}") from None

    def inverse(self, x):
        k = self.index(x)
        # walk the BFS word backwards, multiplying by generator inverses found by order
        y = self.identity
        while k:
            i, g = self.parent[k]
            y = self.mul(y, self.generator_inverse(g))
            k = i
        return y

    def generator_inverse(self, g: int):
        cache = self.__dict__.setdefault("_gen_inv", {})
        if g not in cache:
            s = self.generators[g]
            power, prev = s, self.identity
            while power != self.identity:
                prev = power
                power = self.mul(power, s)
            cache[g] = prev
        return cache[g]

    def extend_representation(self, gen_images: Sequence, matmul: Callable, identity) -> List:
        """Images of all elements under the right representation fixed on generators"""
        images = [identity]
        for k in range(1, len(self.elements)):
            i, g = self.parent[k]
            images.append(matmul(images[i], gen_images[g]))
        return images

    def subgroup(self, predicate: Callable[[Hashable], bool], name: str = "H") -> List[Hashable]:
        return [x for x in self.elements if predicate(x)]

    def is_normal(self, elements: Iterable[Hashable]) -> bool:
        subset = set(elements)
        for k, g in enumerate(self.generators):
            gi = self.generator_inverse(k)
            for h in subset:
                if self.mul(self.mul(gi, h), g) not in subset:
                    return False
        return True


def matrix_group(N: int, generators: Sequence[ModMat], name: str = "H") -> FiniteGroup:
    gens = [tuple(x % N for x in g) for g in generators]
    n = _dim(gens[0]) if gens else 2
    return FiniteGroup(gens, lambda a, b: mat_mul_mod(a, b, N), identity_mod(N, n), name=name)


def signed_group(N: int, signs: Sequence[int], generators: Sequence[ModMat], name: str = "G") -> FiniteGroup:
    """The group {+1, -1}^signs x <generators> inside {+1, -1} x GL_2(Z/N)"""
    gens: List[Signed] = [(1, tuple(x % N for x in g)) for g in generators]
    if -1 in signs:
        gens.append((-1, identity_mod(N)))
    return FiniteGroup(gens, signed_mul(N), (1, identity_mod(N)), name=name)


def reduction_kernel(elements: Iterable[ModMat], M: int) -> List[ModMat]:
    """Elements congruent to the identity modulo M"""
    one = identity_mod(M)
    return [a for a in elements if tuple(x % M for x in a) == one]


def generators_of(elements: Sequence[Hashable], mul: Callable, identity: Hashable) -> List[Hashable]:
    """Greedy generating set of a finite group given by its element list"""
    gens: List[Hashable] = []
    span = {identity}
    for x in elements:
        if x in span:
            continue
        gens.append(x)
        span = set(FiniteGroup(gens, mul, identity).elements)
        if len(span) == len(elements):
            break
    return gens


def permutation_matrices(group: FiniteGroup, field) -> List[np.ndarray]:
    """Right regular representation on the group algebra, one matrix per generator"""
    n = group.order
    out = []
    for s in group.generators:
        M = field.zeros(n, n)
        for i, x in enumerate(group.elements):
            M[i, group.index(group.mul(x, s))] = field.one
        out.append(M)
    return out
