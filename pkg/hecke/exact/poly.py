"""Dense univariate polynomials over an exact field: char poly and factorization.

Polynomials are lists of field elements with the leading coefficient first,
the convention of ``sympy.polys.galoistools``. The zero polynomial is ``[]``.
"""

import random
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
from sympy import Poly, QQ, Rational, Symbol
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from hecke.errors import MathDomainError
from hecke.exact.fields import ExtensionField, Field, PrimeField, RationalField

Polynomial = List


def strip(F: Field, f: Sequence) -> Polynomial:
    f = list(f)
    k = 0
    while k < len(f) and F.is_zero(f[k]):
        k += 1
    return f[k:]


def degree(f: Polynomial) -> int:
    return len(f) - 1


def monic(F: Field, f: Polynomial) -> Polynomial:
    f = strip(F, f)
    if not f:
        return f
    inv = F.inv(f[0])
    return [F.mul(inv, c) for c in f]


def from_ints(F: Field, coeffs: Sequence[int]) -> Polynomial:
    return strip(F, [F.convert(c) for c in coeffs])


def poly_add(F: Field, f: Polynomial, g: Polynomial) -> Polynomial:
    if len(f) < len(g):
        f, g = g, f
    shift = len(f) - len(g)
    out = list(f[:shift]) + [F.add(a, b) for a, b in zip(f[shift:], g)]
    return strip(F, out)


def poly_neg(F: Field, f: Polynomial) -> Polynomial:
    return [F.neg(c) for c in f]


def poly_sub(F: Field, f: Polynomial, g: Polynomial) -> Polynomial:
    return poly_add(F, f, poly_neg(F, g))


def poly_scale(F: Field, c, f: Polynomial) -> Polynomial:
    return strip(F, [F.mul(c, a) for a in f])


def poly_mul(F: Field, f: Polynomial, g: Polynomial) -> Polynomial:
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return strip(F, out)


def poly_divmod(F: Field, f: Polynomial, g: Polynomial) -> Tuple[Polynomial, Polynomial]:
    g = strip(F, g)
    if not g:
        raise MathDomainError("polynomial division by zero")
    f = strip(F, f)
    if len(f) < len(g):
        return [], f
    inv = F.inv(g[0])
    rem = list(f)
    quo = []
    for k in range(len(f) - len(g) + 1):
        c = F.mul(rem[k], inv)
        quo.append(c)
        if F.is_zero(c):
            continue
        for j in range(1, len(g)):
            rem[k + j] = F.sub(rem[k + j], F.mul(c, g[j]))
    return strip(F, quo), strip(F, rem[len(f) - len(g) + 1:])


def poly_rem(F: Field, f: Polynomial, g: Polynomial) -> Polynomial:
    return poly_divmod(F, f, g)[1]


def poly_quo(F: Field, f: Polynomial, g: Polynomial) -> Polynomial:
    return poly_divmod(F, f, g)[0]


def poly_gcd(F: Field, f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd"""
    f, g = strip(F, f), strip(F, g)
    while g:
        f, g = g, poly_rem(F, f, g)
    return monic(F, f)


def poly_pow_mod(F: Field, f: Polynomial, n: int, g: Polynomial) -> Polynomial:
    result = [F.one]
    base = poly_rem(F, f, g)
    while n:
        if n & 1:
            result = poly_rem(F, poly_mul(F, result, base), g)
        base = poly_rem(F, poly_mul(F, base, base), g)
        n >>= 1
    return result


def poly_pow(F: Field, f: Polynomial, n: int) -> Polynomial:
    result = [F.one]
    for _ in range(n):
        result = poly_mul(F, result, f)
    return result


def poly_diff(F: Field, f: Polynomial) -> Polynomial:
    n = degree(f)
    return strip(F, [F.mul(F.convert(n - i), c) for i, c in enumerate(f[:-1])])


def poly_eval(F: Field, f: Polynomial, x):
    acc = F.zero
    for c in f:
        acc = F.add(F.mul(acc, x), c)
    return acc


def is_one(F: Field, f: Polynomial) -> bool:
    return len(f) == 1 and f[0] == F.one


def eval_matrix(F: Field, f: Polynomial, M: np.ndarray) -> np.ndarray:
    """f(M) by Horner's rule"""
    n = M.shape[0]
    acc = F.zeros(n, n)
    I = F.identity(n)
    for c in f:
        acc = F.madd(F.matmul(acc, M), F.mscale(c, I))
    return acc


def linear(F: Field, root) -> Polynomial:
    """x - root"""
    return [F.one, F.neg(F.convert(root))]


def poly_to_str(F: Field, f: Polynomial) -> str:
    if not f:
        return "0"
    terms = []
    n = degree(f)
    for i, c in enumerate(f):
        if F.is_zero(c):
            continue
        e = n - i
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        coeff = F.to_str(c)
        if mono and c == F.one:
            terms.append(mono)
        elif mono:
            terms.append(f"{coeff}*{mono}")
        else:
            terms.append(coeff)
    return " + ".join(terms)


def char_poly(F: Field, M: np.ndarray) -> Polynomial:
    """Monic characteristic polynomial via Hessenberg reduction"""
    n = M.shape[0]
    H = [[M[i, j] for j in range(n)] for i in range(n)]
    if F.characteristic:
        H = [[F.convert(x) for x in row] for row in H]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if not F.is_zero(H[i][j])), None)
        if piv is None:
            continue
        if piv != j + 1:
            H[piv], H[j + 1] = H[j + 1], H[piv]
            for row in H:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        t_inv = F.inv(H[j + 1][j])
        for i in range(j + 2, n):
            u = F.mul(H[i][j], t_inv)
            if F.is_zero(u):
                continue
            H[i] = [F.sub(a, F.mul(u, b)) for a, b in zip(H[i], H[j + 1])]
            for row in H:
                row[j + 1] = F.add(row[j + 1], F.mul(u, row[i]))
    # p_m(x) for the leading m x m block, stored lowest degree first
    p = [[F.one]]
    for m in range(1, n + 1):
        prev = p[m - 1]
        h_mm = H[m - 1][m - 1]
        pm = [F.zero] + list(prev)
        for k, c in enumerate(prev):
            pm[k] = F.sub(pm[k], F.mul(h_mm, c))
        t = F.one
        for i in range(m - 1, 0, -1):
            t = F.mul(t, H[i][i - 1])
            coeff = F.mul(t, H[i - 1][m - 1])
            if F.is_zero(coeff):
                continue
            for k, c in enumerate(p[i - 1]):
                pm[k] = F.sub(pm[k], F.mul(coeff, c))
        p.append(pm)
    return list(reversed(p[n]))


def min_poly(F: Field, M: np.ndarray) -> Polynomial:
    """Minimal polynomial of M, found from the first linear dependency among powers"""
    n = M.shape[0]
    if n == 0:
        return [F.one]
    powers = [F.identity(n).reshape(1, n * n)]
    cur = F.identity(n)
    for d in range(1, n + 1):
        cur = F.matmul(cur, M)
        powers.append(cur.reshape(1, n * n))
        stack = np.concatenate(powers, axis=0)
        kernel = F.left_kernel_basis(stack)
        if kernel.shape[0]:
            rel = kernel[-1]
            coeffs = [rel[k] for k in range(d + 1)]
            return monic(F, list(reversed(coeffs)))
    return char_poly(F, M)


def _sort_factors(F: Field, factors):
    return sorted(factors, key=lambda fk: (degree(fk[0]), [F.sort_key(c) for c in fk[0]], fk[1]))


def factor(F: Field, f: Polynomial, seed: int = 0) -> List[Tuple[Polynomial, int]]:
    """Monic irreducible factors with multiplicities, in a deterministic order"""
    f = monic(F, f)
    if degree(f) < 1:
        return []
    if isinstance(F, PrimeField):
        _, factors = gf_factor([ZZ(int(c)) for c in f], F.p, ZZ)
        out = [([int(c) % F.p for c in g], k) for g, k in factors]
    elif isinstance(F, RationalField):
        x = Symbol("x")
        _, factors = Poly([Rational(c.numerator, c.denominator) for c in f], x, domain=QQ).factor_list()
        out = []
        for g, k in factors:
            coeffs = g.monic().all_coeffs()
            out.append(([Fraction(int(c.p), int(c.q)) for c in coeffs], k))
    elif isinstance(F, ExtensionField):
        out = _factor_extension(F, f, random.Random(seed))
    else:
        raise MathDomainError(f"cannot factor over {F.name}")
    return _sort_factors(F, out)


def _sqf_list(F: ExtensionField, f: Polynomial):
    """Square-free decomposition in characteristic p, as gf_sqf_list does it"""
    n, factors, p = 1, [], F.p
    f = monic(F, f)
    while True:
        sqf = False
        if degree(f) < 1:
            break
        D = poly_diff(F, f)
        if D:
            g = poly_gcd(F, f, D)
            h = poly_quo(F, f, g)
            i = 1
            while not is_one(F, h):
                G = poly_gcd(F, g, h)
                Hq = poly_quo(F, h, G)
                if degree(Hq) > 0:
                    factors.append((Hq, i * n))
                g, h, i = poly_quo(F, g, G), G, i + 1
            if is_one(F, g):
                sqf = True
            else:
                f = g
        if sqf:
            break
        # f is a p-th power: take the p-th root coefficientwise
        d = degree(f) // p
        f = [F.frobenius_root(f[i * p]) for i in range(d + 1)]
        n *= p
    return factors


def _ddf(F: ExtensionField, f: Polynomial):
    q = F.order
    x = [F.one, F.zero]
    i, h, factors = 1, x, []
    while 2 * i <= degree(f):
        h = poly_pow_mod(F, h, q, f)
        g = poly_gcd(F, f, poly_sub(F, h, x))
        if not is_one(F, g):
            factors.append((g, i))
            f = poly_quo(F, f, g)
            h = poly_rem(F, h, f)
        i += 1
    if degree(f) > 0:
        factors.append((f, degree(f)))
    return factors


def _edf(F: ExtensionField, f: Polynomial, n: int, rng: random.Random):
    if degree(f) <= n:
        return [f]
    q = F.order
    elements = F.elements()
    while True:
        r = strip(F, [rng.choice(elements) for _ in range(2 * n)])
        if degree(r) < 1:
            continue
        if F.p == 2:
            h, t = r, r
            for _ in range(n * F.degree - 1):
                t = poly_pow_mod(F, t, 2, f)
                h = poly_add(F, h, t)
        else:
            h = poly_sub(F, poly_pow_mod(F, r, (q**n - 1) // 2, f), [F.one])
        g = poly_gcd(F, f, h)
        if degree(g) > 0 and degree(g) < degree(f):
            return _edf(F, g, n, rng) + _edf(F, poly_quo(F, f, g), n, rng)


def _factor_extension(F: ExtensionField, f: Polynomial, rng: random.Random):
    out = []
    for g, k in _sqf_list(F, f):
        for h, d in _ddf(F, g):
            for irr in _edf(F, h, d, rng):
                out.append((monic(F, irr), k))
    return out


def roots(F: Field, f: Polynomial) -> list:
    """Roots in F, with multiplicity, from the linear factors"""
    out = []
    for g, k in factor(F, f):
        if degree(g) == 1:
            out.extend([F.neg(g[1])] * k)
    return out


def expand(F: Field, factors: List[Tuple[Polynomial, int]]) -> Polynomial:
    result = [F.one]
    for g, k in factors:
        result = poly_mul(F, result, poly_pow(F, g, k))
    return result
