"""Exact fields (rationals, prime fields, extensions) and their dense matrix kernels"""

from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Callable, List, Sequence, Tuple

import numpy as np
from sympy import factorint, isprime, n_order, primitive_root
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from hecke.errors import MathDomainError, ValidationError


class Field(ABC):
    """A field with scalar arithmetic and row-major dense matrix kernels.

    Matrices are numpy arrays; row vectors act on the left (v -> v @ M).
    The generic kernels work on object arrays whose entries support the
    arithmetic operators; PrimeField overrides them with int64 kernels.
    """

    characteristic: int = 0
    degree: int = 1
    dtype = object

    @property
    @abstractmethod
    def name(self) -> str:
        """Short name used in records, e.g. 'Q', 'F5', 'F5^2'"""

    @property
    def order(self):
        """Number of elements, or None when infinite"""
        return None

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @abstractmethod
    def convert(self, x):
        """Map an integer (or an element of the prime subfield) into the field"""

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    @abstractmethod
    def to_str(self, x) -> str:
        """Decimal-string form used by the record encoder"""

    @abstractmethod
    def parse(self, s: str):
        """Inverse of to_str"""

    @abstractmethod
    def sort_key(self, x):
        """Total order used for deterministic enumeration"""

    @abstractmethod
    def roots_of_unity(self, n: int) -> list:
        """All n-th roots of unity in the field, 1 first"""

    # scalar arithmetic
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if self.is_zero(a):
            raise MathDomainError("division by zero")
        return self.one / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def embed(self, x, source: "Field"):
        """Image of x from a subfield `source`"""
        if source is self:
            return x
        raise MathDomainError(f"no embedding of {source.name} into {self.name}")

    # matrix construction
    def matrix(self, rows: Sequence[Sequence]) -> np.ndarray:
        rows = [list(r) for r in rows]
        n = len(rows[0]) if rows else 0
        out = self.zeros(len(rows), n)
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                out[i, j] = self.convert(x)
        return out

    def zeros(self, m: int, n: int) -> np.ndarray:
        out = np.empty((m, n), dtype=object)
        out.fill(self.zero)
        return out

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = self.one
        return out

    def lift_matrix(self, A: np.ndarray, source: "Field") -> np.ndarray:
        """Entrywise embedding of a matrix over a subfield"""
        if source is self:
            return A
        out = self.zeros(*A.shape)
        for idx in np.ndindex(A.shape):
            out[idx] = self.embed(A[idx], source)
        return out

    # matrix arithmetic
    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if A.shape[1] == 0:
            return self.zeros(A.shape[0], B.shape[1])
        return A @ B

    def madd(self, A, B):
        return A + B

    def msub(self, A, B):
        return A - B

    def mscale(self, c, A):
        if A.size == 0:
            return A.copy()
        return np.vectorize(lambda x: self.mul(c, x), otypes=[object])(A)

    def is_zero_matrix(self, A: np.ndarray) -> bool:
        return all(self.is_zero(x) for x in A.flat)

    def equal(self, A: np.ndarray, B: np.ndarray) -> bool:
        return A.shape == B.shape and self.is_zero_matrix(self.msub(A, B))

    # elimination
    def rref(self, A: np.ndarray) -> Tuple[np.ndarray, List[int]]:
        """Reduced row echelon form and pivot columns; pivots on lowest index"""
        A = np.array(A, dtype=object, copy=True)
        m, n = A.shape
        pivots: List[int] = []
        r = 0
        for c in range(n):
            if r == m:
                break
            nz = [i for i in range(r, m) if not self.is_zero(A[i, c])]
            if not nz:
                continue
            piv = nz[0]
            if piv != r:
                A[[r, piv]] = A[[piv, r]]
            inv = self.inv(A[r, c])
            A[r] = np.array([self.mul(inv, x) for x in A[r]], dtype=object)
            col = A[:, c].copy()
            rows = [i for i in range(m) if i != r and not self.is_zero(col[i])]
            if rows:
                A[rows] = A[rows] - np.outer(col[rows], A[r])
            pivots.append(c)
            r += 1
        return A, pivots

    def rank(self, A: np.ndarray) -> int:
        return len(self.rref(A)[1])

    def row_basis(self, A: np.ndarray) -> Tuple[np.ndarray, List[int]]:
        """Echelon basis of the row space (nonzero rref rows) and its pivots"""
        R, pivots = self.rref(A)
        return R[: len(pivots)], pivots

    def kernel_basis(self, A: np.ndarray) -> np.ndarray:
        """Echelonized basis (as rows) of the right null space {x : A x = 0}"""
        m, n = A.shape
        R, pivots = self.rref(A)
        free = [j for j in range(n) if j not in set(pivots)]
        basis = self.zeros(len(free), n)
        for k, f in enumerate(free):
            basis[k, f] = self.one
            for i, pc in enumerate(pivots):
                basis[k, pc] = self.neg(R[i, f])
        if not free:
            return basis
        return self.row_basis(basis)[0]

    def left_kernel_basis(self, A: np.ndarray) -> np.ndarray:
        """Rows x with x @ A = 0"""
        return self.kernel_basis(A.T)

    def inverse(self, A: np.ndarray) -> np.ndarray:
        n = A.shape[0]
        aug = np.concatenate([np.array(A, dtype=self.dtype), self.identity(n)], axis=1)
        R, pivots = self.rref(aug)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise MathDomainError("singular")
        return R[:, n:]

    def reduce_rows(self, X: np.ndarray, B: np.ndarray, pivots: List[int]) -> np.ndarray:
        """Reduce rows of X modulo the echelon basis B (zero at B's pivots)"""
        if not pivots or X.shape[0] == 0:
            return np.array(X, dtype=self.dtype, copy=True)
        return self.msub(X, self.matmul(np.array(X[:, pivots], dtype=self.dtype), B))

    def restrict(self, M: np.ndarray, B: np.ndarray, pivots: List[int]) -> np.ndarray:
        """Matrix C with B @ M = C @ B, for an echelon basis B of an M-stable subspace"""
        return np.array(self.matmul(B, M)[:, pivots], dtype=self.dtype)

    def __repr__(self) -> str:
        return f"<Field {self.name}>"


class RationalField(Field):
    """The rationals, elements are fractions.Fraction in lowest terms"""

    @property
    def name(self) -> str:
        return "Q"

    def convert(self, x):
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def to_str(self, x) -> str:
        return str(Fraction(x))

    def parse(self, s: str):
        return Fraction(s)

    def sort_key(self, x):
        x = Fraction(x)
        return (x != 1, abs(x), x < 0)

    def roots_of_unity(self, n: int) -> list:
        return [Fraction(1)] + ([Fraction(-1)] if n % 2 == 0 else [])

    def inv(self, a):
        if a == 0:
            raise MathDomainError("division by zero")
        return 1 / Fraction(a)


class PrimeField(Field):
    """Z/p with elements stored as ints in [0, p) and int64 matrix kernels"""

    dtype = np.int64

    def __init__(self, p: int):
        if not isprime(p):
            raise ValidationError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.degree = 1

    @property
    def name(self) -> str:
        return f"F{self.p}"

    @property
    def order(self):
        return self.p

    def convert(self, x):
        if isinstance(x, Fraction):
            return self.div(int(x.numerator) % self.p, int(x.denominator) % self.p)
        return int(x) % self.p

    def to_str(self, x) -> str:
        return str(int(x))

    def parse(self, s: str):
        return int(s) % self.p

    def sort_key(self, x):
        return int(x)

    def generator(self) -> int:
        return int(primitive_root(self.p)) if self.p > 2 else 1

    def roots_of_unity(self, n: int) -> list:
        m = gcd(n, self.p - 1)
        g = self.generator()
        step = (self.p - 1) // m
        return sorted({pow(g, step * k, self.p) for k in range(m)}, key=lambda v: (v != 1, v))

    def elements(self):
        return list(range(self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise MathDomainError("division by zero")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return int(a) % self.p == 0

    def matrix(self, rows: Sequence[Sequence]) -> np.ndarray:
        rows = [list(r) for r in rows]
        n = len(rows[0]) if rows else 0
        out = np.zeros((len(rows), n), dtype=np.int64)
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                out[i, j] = self.convert(x)
        return out

    def zeros(self, m: int, n: int) -> np.ndarray:
        return np.zeros((m, n), dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def matmul(self, A, B):
        return np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64) % self.p

    def madd(self, A, B):
        return (A + B) % self.p

    def msub(self, A, B):
        return (A - B) % self.p

    def mscale(self, c, A):
        return (int(c) * np.asarray(A, dtype=np.int64)) % self.p

    def is_zero_matrix(self, A) -> bool:
        return not np.any(np.asarray(A, dtype=np.int64) % self.p)

    def rref(self, A):
        p = self.p
        A = np.array(A, dtype=np.int64) % p
        m, n = A.shape
        pivots: List[int] = []
        r = 0
        for c in range(n):
            if r == m:
                break
            nz = np.nonzero(A[r:, c])[0]
            if nz.size == 0:
                continue
            piv = r + int(nz[0])
            if piv != r:
                A[[r, piv]] = A[[piv, r]]
            A[r] = (A[r] * self.inv(A[r, c])) % p
            col = A[:, c].copy()
            col[r] = 0
            rows = np.nonzero(col)[0]
            if rows.size:
                A[rows] = (A[rows] - np.outer(col[rows], A[r])) % p
            pivots.append(c)
            r += 1
        return A, pivots

    def kernel_basis(self, A):
        m, n = A.shape
        R, pivots = self.rref(A)
        free = [j for j in range(n) if j not in set(pivots)]
        basis = np.zeros((len(free), n), dtype=np.int64)
        for k, f in enumerate(free):
            basis[k, f] = 1
            for i, pc in enumerate(pivots):
                basis[k, pc] = (-R[i, f]) % self.p
        if not free:
            return basis
        return self.row_basis(basis)[0]

    def inverse(self, A):
        n = A.shape[0]
        aug = np.concatenate([np.asarray(A, dtype=np.int64) % self.p, self.identity(n)], axis=1)
        R, pivots = self.rref(aug)
        if len(pivots) < n or pivots[:n] != list(range(n)):
            raise MathDomainError("singular")
        return R[:, n:]

    def lift_matrix(self, A, source):
        if source is self:
            return A
        raise MathDomainError(f"no embedding of {source.name} into {self.name}")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))


class GFElement:
    """Element of F_{p^r}, encoded as the integer sum c_i p^i of its coefficients"""

    __slots__ = ("field", "value")

    def __init__(self, field: "ExtensionField", value: int):
        self.field = field
        self.value = value

    def __add__(self, other):
        return self.field.add(self, self.field.convert(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field.sub(self, self.field.convert(other))

    def __rsub__(self, other):
        return self.field.sub(self.field.convert(other), self)

    def __mul__(self, other):
        return self.field.mul(self, self.field.convert(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.field.div(self, self.field.convert(other))

    def __rtruediv__(self, other):
        return self.field.div(self.field.convert(other), self)

    def __neg__(self):
        return self.field.neg(self)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.value == other.value and self.field is other.field
        if isinstance(other, int):
            return self.value == self.field.convert(other).value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"GF({self.field.name}:{self.value})"


class ExtensionField(Field):
    """F_{p^r} built on the lexicographically first monic irreducible of degree r"""

    def __init__(self, p: int, r: int):
        if not isprime(p) or r < 2:
            raise ValidationError(f"bad extension field parameters p={p}, r={r}")
        self.p = p
        self.characteristic = p
        self.degree = r
        self.q = p**r
        self.modulus = self._first_irreducible(p, r)
        self._weights = np.array([p**i for i in range(r)], dtype=np.int64)
        self._digits = np.array(
            [[(v // p**i) % p for i in range(r)] for v in range(self.q)], dtype=np.int64
        )
        self._exp, self._log = self._build_log_tables()
        self._elements = [GFElement(self, v) for v in range(self.q)]

    @staticmethod
    def _first_irreducible(p: int, r: int) -> List[int]:
        """Monic coefficients, highest degree first"""
        for tail in product(range(p), repeat=r):
            if tail[-1] == 0:
                continue
            f = [1] + list(tail)
            if gf_irreducible_p([ZZ(c) for c in f], p, ZZ):
                return f
        raise MathDomainError(f"no irreducible polynomial of degree {r} over F{p}")

    def _mul_digits(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p, r = self.p, self.degree
        prod = np.convolve(a, b) % p  # low degree first, length 2r-1
        # reduce by x^r = -(c_{r-1} x^{r-1} + ... + c_0)
        low = [(-c) % p for c in reversed(self.modulus[1:])]
        prod = list(prod)
        for k in range(len(prod) - 1, r - 1, -1):
            lead = prod[k]
            if lead:
                for i in range(r):
                    prod[k - r + i] = (prod[k - r + i] + lead * low[i]) % p
            prod[k] = 0
        return np.array(prod[:r], dtype=np.int64)

    def _encode(self, digits: np.ndarray) -> int:
        return int(np.dot(digits % self.p, self._weights))

    def _build_log_tables(self):
        q = self.q
        for g in range(2, q):
            exp = [1]
            cur = self._digits[1]
            gd = self._digits[g]
            for _ in range(q - 2):
                cur = self._mul_digits(cur, gd)
                v = self._encode(cur)
                if v == 1:
                    break
                exp.append(v)
            if len(exp) == q - 1 and len(set(exp)) == q - 1:
                log = {v: k for k, v in enumerate(exp)}
                return exp, log
        raise MathDomainError(f"no primitive element found in {self.name}")

    @property
    def name(self) -> str:
        return f"F{self.p}^{self.degree}"

    @property
    def order(self):
        return self.q

    def element(self, value: int) -> GFElement:
        return self._elements[value]

    def elements(self):
        return list(self._elements)

    def convert(self, x):
        if isinstance(x, GFElement):
            if x.field is not self:
                return self.embed(x, x.field)
            return x
        if isinstance(x, Fraction):
            return self.div(self.convert(x.numerator), self.convert(x.denominator))
        return self._elements[int(x) % self.p]

    def embed(self, x, source):
        if source is self:
            return x
        if isinstance(source, PrimeField):
            return self._elements[int(x) % self.p]
        raise MathDomainError(f"no embedding of {source.name} into {self.name}")

    def lift_matrix(self, A, source):
        if source is self:
            return A
        out = self.zeros(*A.shape)
        for idx in np.ndindex(A.shape):
            out[idx] = self.embed(A[idx], source)
        return out

    def to_str(self, x) -> str:
        return str(x.value)

    def parse(self, s: str):
        return self._elements[int(s)]

    def sort_key(self, x):
        return x.value

    def roots_of_unity(self, n: int) -> list:
        m = gcd(n, self.q - 1)
        step = (self.q - 1) // m
        vals = sorted({self._exp[(step * k) % (self.q - 1)] for k in range(m)}, key=lambda v: (v != 1, v))
        return [self._elements[v] for v in vals]

    def add(self, a, b):
        return self._elements[self._encode(self._digits[a.value] + self._digits[b.value])]

    def sub(self, a, b):
        return self._elements[self._encode(self._digits[a.value] - self._digits[b.value])]

    def neg(self, a):
        return self._elements[self._encode(-self._digits[a.value])]

    def mul(self, a, b):
        if a.value == 0 or b.value == 0:
            return self._elements[0]
        return self._elements[self._exp[(self._log[a.value] + self._log[b.value]) % (self.q - 1)]]

    def inv(self, a):
        if a.value == 0:
            raise MathDomainError("division by zero")
        return self._elements[self._exp[(-self._log[a.value]) % (self.q - 1)]]

    def is_zero(self, a) -> bool:
        return a.value == 0

    def frobenius_root(self, a):
        """The unique b with b^p = a"""
        return self.power(a, self.q // self.p)

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and (other.p, other.degree) == (self.p, self.degree)

    def __hash__(self):
        return hash(("F", self.p, self.degree))


QQ_FIELD = RationalField()


def finite_field(p: int, r: int = 1) -> Field:
    """Cached constructor so that equal fields are the same object"""
    return _cached_field(int(p), int(r))


@lru_cache(maxsize=None)
def _cached_field(p: int, r: int) -> Field:
    if r == 1:
        return PrimeField(p)
    return ExtensionField(p, r)


def field_from_name(name: str) -> Field:
    """Parse 'Q', 'F5' or 'F5^2'"""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ_FIELD
    if name.startswith("F"):
        body = name[1:]
        try:
            if "^" in body:
                p, r = body.split("^")
                return finite_field(int(p), int(r))
            return finite_field(int(body))
        except ValueError as e:
            raise ValidationError(f"unknown field '{name}': {e}") from e
    raise ValidationError(f"unknown field '{name}'")


def extension_degree_for(p: int, n: int) -> int:
    """Smallest r with n | p^r - 1"""
    if n <= 1:
        return 1
    if n % p == 0:
        raise MathDomainError(f"no roots of unity of order {n} in characteristic {p}")
    return int(n_order(p, n))


def common_field(a: Field, b: Field) -> Field:
    """Smallest field of the same characteristic containing both"""
    if a is b:
        return a
    if a.characteristic != b.characteristic:
        raise MathDomainError(f"fields {a.name} and {b.name} have different characteristic")
    if a.characteristic == 0:
        return QQ_FIELD
    if a.degree == 1:
        return b
    if b.degree == 1:
        return a
    if a.degree == b.degree:
        return a
    raise MathDomainError(f"no common field for {a.name} and {b.name} without an explicit embedding")


def field_embeddings(source: Field, target: Field) -> List[Callable]:
    """Every field embedding of source into target, as element maps.

    A prime field has the single embedding through convert. An extension
    embeds once per root of its defining polynomial in the target; there
    are none unless its degree divides the degree of the target.
    """
    if source is target or source == target:
        return [lambda x: x]
    if source.characteristic != target.characteristic or target.degree % source.degree:
        return []
    if source.degree == 1:
        return [target.convert]
    roots = []
    for beta in target.elements():
        acc = target.zero
        for c in source.modulus:
            acc = target.add(target.mul(acc, beta), target.convert(c))
        if target.is_zero(acc):
            roots.append(beta)
    return [_embedding_through(source, target, beta) for beta in roots]


def _embedding_through(source: "ExtensionField", target: Field, beta) -> Callable:
    powers = [target.power(beta, i) for i in range(source.degree)]

    def embed(x):
        out = target.zero
        for d, b in zip(source._digits[x.value], powers):
            out = target.add(out, target.mul(target.convert(int(d)), b))
        return out

    return embed


def multiplicative_order(field: Field, x) -> int:
    """Order of a nonzero element"""
    if field.is_zero(x):
        raise MathDomainError("zero has no multiplicative order")
    if not field.is_finite:
        if x == 1:
            return 1
        if x == -1:
            return 2
        raise MathDomainError(f"{x} is not a root of unity in Q")
    n = field.order - 1
    for ell, e in factorint(n).items():
        for _ in range(e):
            if field.power(x, n // ell) == field.one:
                n //= ell
            else:
                break
    return n
