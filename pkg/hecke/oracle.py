"""Independent oracles: q-expansions and closed formulas used to anchor the computations"""

from functools import lru_cache
from typing import List

from sympy import divisor_sigma


@lru_cache(maxsize=None)
def delta_coefficients(order: int) -> List[int]:
    """Coefficients of q prod (1 - q^n)^24 up to q^order, index = exponent"""
    # prod (1 - q^n)^24 truncated at q^(order - 1)
    prec = order
    series = [1] + [0] * (prec - 1)
    for n in range(1, prec):
        for _ in range(24):
            for k in range(prec - 1, n - 1, -1):
                series[k] -= series[k - n]
    return [0] + series[: order]


def tau(n: int) -> int:
    """Ramanujan's tau function from the product expansion"""
    return delta_coefficients(n + 1)[n]


def sigma(k: int, n: int) -> int:
    return int(divisor_sigma(n, k))


def eisenstein_eigenvalue(p: int, k: int) -> int:
    """Eigenvalue of T_p on the Eisenstein class of weight k: 1 + p^(k-1)"""
    return 1 + p ** (k - 1)


def dim_cusp_forms_level1(k: int) -> int:
    """dim S_k(SL2(Z)) from the classical formula"""
    if k < 12 or k % 2:
        return 0
    d = k // 12
    return d - 1 if k % 12 == 2 else d


def dim_h1_level1(k: int) -> int:
    """dim H^1(SL2(Z), Sym^(k-2)(Q^2)): two copies of the cusp forms plus one Eisenstein class"""
    if k < 4 or k % 2:
        return 0
    return 2 * dim_cusp_forms_level1(k) + 1


def gaussian_binomial(n: int, m: int, q: int) -> int:
    """[n choose m]_q, the number of m-dimensional subspaces of F_q^n"""
    if m < 0 or m > n:
        return 0
    num, den = 1, 1
    for i in range(m):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
