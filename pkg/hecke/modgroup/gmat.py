"""Immutable integer matrices with cached determinant and sign"""

from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

from hecke.errors import MathDomainError


class GMat:
    """Square integer matrix, hashable, with exact products and unit inverses"""

    def __init__(self, rows: Iterable[Iterable[int]]):
        self.rows: Tuple[Tuple[int, ...], ...] = tuple(tuple(int(x) for x in r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise MathDomainError("GMat must be square")

    @classmethod
    def identity(cls, n: int = 2) -> "GMat":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, *entries: int) -> "GMat":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_flat(cls, entries: Sequence[int]) -> "GMat":
        n = int(round(len(entries) ** 0.5))
        return cls([entries[i * n:(i + 1) * n] for i in range(n)])

    @cached_property
    def det(self) -> int:
        # fraction-free Bareiss elimination
        n = self.n
        A = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if A[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
                if swap is None:
                    return 0
                A[k], A[swap] = A[swap], A[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            prev = A[k][k]
        return sign * A[n - 1][n - 1] if n else 1

    @property
    def sign(self) -> int:
        """Sign of the determinant"""
        d = self.det
        if d == 0:
            raise MathDomainError("singular")
        return 1 if d > 0 else -1

    @property
    def is_unit(self) -> bool:
        return abs(self.det) == 1

    def __matmul__(self, other: "GMat") -> "GMat":
        cols = list(zip(*other.rows))
        return GMat([[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows])

    def __eq__(self, other) -> bool:
        return isinstance(other, GMat) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __repr__(self) -> str:
        return "GMat(" + "; ".join(",".join(str(x) for x in r) for r in self.rows) + ")"

    def flat(self) -> Tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def to_list(self) -> List[List[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "GMat":
        return GMat(zip(*self.rows))

    def adjugate(self) -> "GMat":
        n = self.n
        if n == 1:
            return GMat([[1]])
        if n == 2:
            (a, b), (c, d) = self.rows
            return GMat([[d, -b], [-c, a]])
        cof = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = GMat([[self.rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i])
                row.append((-1) ** (i + j) * minor.det)
            cof.append(row)
        return GMat(cof).transpose()

    def inverse(self) -> "GMat":
        """Exact inverse of a unit"""
        if not self.is_unit:
            raise MathDomainError(f"{self} is not invertible over Z")
        adj = self.adjugate()
        return GMat([[self.det * x for x in r] for r in adj.rows])

    def is_integral_quotient(self, other: "GMat") -> bool:
        """True iff self @ other^{-1} is an integer matrix"""
        d = other.det
        prod = self @ other.adjugate()
        return all(x % d == 0 for x in prod.flat())

    def right_quotient(self, other: "GMat") -> "GMat":
        """self @ other^{-1}, which must be integral"""
        d = other.det
        prod = self @ other.adjugate()
        if any(x % d for x in prod.flat()):
            raise MathDomainError(f"{self} @ {other}^-1 is not integral")
        return GMat([[x // d for x in r] for r in prod.rows])

    def mod(self, N: int) -> Tuple[int, ...]:
        """Flattened image in M_n(Z/N)"""
        return tuple(x % N for x in self.flat())


def mat_power(g: GMat, e: int) -> GMat:
    if e < 0:
        g, e = g.inverse(), -e
    result = GMat.identity(g.n)
    for _ in range(e):
        result = result @ g
    return result
