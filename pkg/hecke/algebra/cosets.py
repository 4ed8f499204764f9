"""Double coset sums: decomposition into right cosets, composition, Hecke operators"""

from collections import deque
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple

from sympy import divisors, isprime

from hecke.constants import SignPolicy, logger
from hecke.errors import MathDomainError
from hecke.exact.hnf import hnf
from hecke.modgroup.gmat import GMat
from hecke.modgroup.groups import GroupDescriptor
from hecke.oracle import gaussian_binomial

CosetKey = Tuple[int, Tuple[Tuple[int, ...], ...]]


def coset_key(group: GroupDescriptor, g: GMat) -> CosetKey:
    """Canonical form of the right coset Gamma g.

    Writing g = u h with h the Hermite normal form, the key is the coset
    index of the unimodular part u in Gamma\\ambient together with h.
    """
    if group.sign_policy == SignPolicy.SL and g.det < 0:
        raise MathDomainError(f"{g} has negative determinant under the SL policy")
    H, U = hnf(g.rows)
    u = GMat(U).inverse()
    return group.coset_table.lookup(u), tuple(tuple(r) for r in H)


def coset_rep(group: GroupDescriptor, key: CosetKey) -> GMat:
    idx, h = key
    return group.coset_table.reps[idx] @ GMat(h)


class DoubleCosetSum:
    """Sum of a_j Gamma delta_j over pairwise distinct right cosets, right Gamma'-invariant"""

    def __init__(self, left: GroupDescriptor, right: GroupDescriptor, terms: Optional[Dict[CosetKey, int]] = None):
        self.left = left
        self.right = right
        self._terms: Dict[CosetKey, int] = {k: c for k, c in (terms or {}).items() if c != 0}

    @classmethod
    def from_matrices(cls, left, right, items: Iterable[Tuple[int, GMat]]) -> "DoubleCosetSum":
        terms: Dict[CosetKey, int] = {}
        for c, g in items:
            k = coset_key(left, g)
            terms[k] = terms.get(k, 0) + c
        return cls(left, right, terms)

    @property
    def terms(self) -> List[Tuple[int, GMat]]:
        """(coefficient, representative) in canonical order"""
        return [(self._terms[k], coset_rep(self.left, k)) for k in sorted(self._terms)]

    @property
    def keys(self) -> List[CosetKey]:
        return sorted(self._terms)

    def coefficient(self, key: CosetKey) -> int:
        return self._terms.get(key, 0)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        return sum(self._terms.values())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _check_groups(self, other: "DoubleCosetSum") -> None:
        if self.left != other.left or self.right != other.right:
            raise MathDomainError("group mismatch")

    def __add__(self, other: "DoubleCosetSum") -> "DoubleCosetSum":
        self._check_groups(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return DoubleCosetSum(self.left, self.right, terms)

    def scale(self, c: int) -> "DoubleCosetSum":
        return DoubleCosetSum(self.left, self.right, {k: c * v for k, v in self._terms.items()})

    def __sub__(self, other: "DoubleCosetSum") -> "DoubleCosetSum":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DoubleCosetSum)
            and self.left == other.left
            and self.right == other.right
            and self._terms == other._terms
        )

    def __repr__(self) -> str:
        return f"<DoubleCosetSum {self.left.name}->{self.right.name} terms={len(self)} degree={self.degree}>"

    def is_right_invariant(self) -> bool:
        """Right multiplication by generators of the right group permutes the cosets, preserving coefficients"""
        for c, rep in self.terms:
            for g in self.right.generators:
                if self.coefficient(coset_key(self.left, rep @ g)) != c:
                    return False
        return True

    def to_records(self) -> List[dict]:
        return [
            {"coeff": str(c), "matrix": [[str(x) for x in row] for row in rep.to_list()], "group": self.left.descriptor_hash}
            for c, rep in self.terms
        ]


def decompose(left: GroupDescriptor, delta: GMat, right: Optional[GroupDescriptor] = None) -> DoubleCosetSum:
    """The right cosets of Gamma delta Gamma' by breadth-first closure under generators of Gamma'"""
    right = right or left
    d = delta.det
    if d == 0:
        raise MathDomainError("singular")
    if gcd(d, left.level) != 1 or gcd(d, right.level) != 1:
        raise MathDomainError("determinant not prime to level")
    start = coset_key(left, delta)
    seen = {start: coset_rep(left, start)}
    queue = deque([start])
    gens = right.generators
    while queue:
        key = queue.popleft()
        rep = seen[key]
        for g in gens:
            k = coset_key(left, rep @ g)
            if k not in seen:
                seen[k] = coset_rep(left, k)
                queue.append(k)
    logger.debug(f"Decomposed {left.name} {delta} {right.name} into {len(seen)} right cosets")
    return DoubleCosetSum(left, right, {k: 1 for k in seen})


def identity_sum(group: GroupDescriptor) -> DoubleCosetSum:
    return decompose(group, GMat.identity(group.n), group)


def formal_products(T1: DoubleCosetSum, T2: DoubleCosetSum) -> List[Tuple[int, GMat]]:
    """All products a_j a'_i delta_j delta'_i before merging"""
    return [(c1 * c2, d1 @ d2) for c1, d1 in T1.terms for c2, d2 in T2.terms]


def compose(T1: DoubleCosetSum, T2: DoubleCosetSum) -> DoubleCosetSum:
    if T1.right != T2.left:
        raise MathDomainError("group mismatch")
    return DoubleCosetSum.from_matrices(T1.left, T2.right, formal_products(T1, T2))


def hecke_tp(p: int, m: int, group: GroupDescriptor) -> DoubleCosetSum:
    """T_p^(m): the double coset of diag(1, ..., 1, p, ..., p) with m entries p"""
    n = group.n
    if not isprime(p):
        raise MathDomainError(f"{p} is not prime")
    if not 0 <= m <= n:
        raise MathDomainError(f"m must lie in 0..{n}, got {m}")
    if group.level % p == 0:
        raise MathDomainError("determinant not prime to level")
    delta = GMat.diag(*([1] * (n - m) + [p] * m))
    return decompose(group, delta, group)


def elementary_divisor_types(a: int, n: int) -> List[Tuple[int, ...]]:
    """Chains d_1 | d_2 | ... | d_n with product a"""
    out: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], remaining: int) -> None:
        k = len(prefix)
        if k == n - 1:
            if not prefix or remaining % prefix[-1] == 0:
                out.append(prefix + (remaining,))
            return
        last = prefix[-1] if prefix else 1
        for d in divisors(remaining):
            if d % last == 0 and remaining % (d ** (n - k)) == 0:
                extend(prefix + (d,), remaining // d)

    extend((), a)
    return sorted(out)


def hecke_ta(a: int, group: GroupDescriptor) -> DoubleCosetSum:
    """T_a: the sum of the distinct double cosets of determinant a"""
    if a < 1:
        raise MathDomainError(f"a must be positive, got {a}")
    if gcd(a, group.level) != 1:
        raise MathDomainError("determinant not prime to level")
    total = DoubleCosetSum(group, group)
    for dtype in elementary_divisor_types(a, group.n):
        total = total + decompose(group, GMat.diag(*dtype), group)
    return total


def degree_formula(p: int, m: int, n: int) -> int:
    """Number of right cosets in T_p^(m): the Gaussian binomial [n, m]_p"""
    return gaussian_binomial(n, m, p)


def series_terms(p: int, k: int, group: GroupDescriptor) -> DoubleCosetSum:
    """Coefficient of X^k in (sum T_{p^i} X^i) * (sum (-1)^j p^{j(j-1)/2} T^(j) X^j)"""
    total = DoubleCosetSum(group, group)
    for j in range(0, min(k, group.n) + 1):
        sign = (-1) ** j * p ** (j * (j - 1) // 2)
        term = compose(hecke_ta(p ** (k - j), group), hecke_tp(p, j, group))
        total = total + term.scale(sign)
    return total


def series_check(p: int, n: int, k_max: int, group: Optional[GroupDescriptor] = None) -> bool:
    """The formal inverse-series identity for T_{p^k}, coefficient by coefficient up to X^k_max"""
    group = group or GroupDescriptor.full(n=n)
    if group.n != n:
        raise MathDomainError(f"group has n={group.n}, expected {n}")
    one = identity_sum(group)
    for k in range(k_max + 1):
        coeff = series_terms(p, k, group)
        expected = one if k == 0 else DoubleCosetSum(group, group)
        if coeff != expected:
            logger.warning(f"Series identity fails at p={p}, n={n}, X^{k}")
            return False
    return True
