"""Hermite normal form of nonsingular integer matrices"""

from typing import List, Sequence, Tuple

from hecke.errors import MathDomainError

IntMatrix = List[List[int]]


def gcdex(a: int, b: int) -> Tuple[int, int, int]:
    """Return (x, y, g) with g = gcd(a, b) >= 0 and a*x + b*y == g"""
    if b == 0:
        if a < 0:
            return -1, 0, -a
        return 1, 0, a
    q, r = divmod(a, b)
    x, y, g = gcdex(b, r)
    return y, x - y * q, g


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hnf(M: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular and U @ M == H, where H is upper
    triangular with positive diagonal and 0 <= H[i][j] < H[j][j] for i < j.
    H depends only on the orbit of M under left multiplication by GL_n(Z).
    """
    n = len(M)
    H = [[int(x) for x in row] for row in M]
    if any(len(row) != n for row in H):
        raise MathDomainError("hnf needs a square matrix")
    U = identity(n)
    for j in range(n):
        for i in range(j + 1, n):
            a, b = H[j][j], H[i][j]
            if b == 0:
                continue
            x, y, g = gcdex(a, b)
            s, t = -b // g, a // g
            H[j], H[i] = (
                [x * u + y * v for u, v in zip(H[j], H[i])],
                [s * u + t * v for u, v in zip(H[j], H[i])],
            )
            U[j], U[i] = (
                [x * u + y * v for u, v in zip(U[j], U[i])],
                [s * u + t * v for u, v in zip(U[j], U[i])],
            )
        if H[j][j] == 0:
            raise MathDomainError("singular")
        if H[j][j] < 0:
            H[j] = [-u for u in H[j]]
            U[j] = [-u for u in U[j]]
        d = H[j][j]
        for i in range(j):
            q = H[i][j] // d
            if q:
                H[i] = [u - q * v for u, v in zip(H[i], H[j])]
                U[i] = [u - q * v for u, v in zip(U[i], U[j])]
    return H, U


def is_hnf(H: Sequence[Sequence[int]]) -> bool:
    n = len(H)
    for j in range(n):
        if H[j][j] <= 0:
            return False
        for i in range(j + 1, n):
            if H[i][j] != 0:
                return False
        for i in range(j):
            if not 0 <= H[i][j] < H[j][j]:
                return False
    return True
