"""Characters of {+1, -1} x (Z/M)* with values in an exact field"""

from collections import deque
from itertools import product
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from hecke.errors import MathDomainError
from hecke.exact.fields import Field, extension_degree_for, finite_field, QQ_FIELD
from hecke.finite_groups import units_mod


def unit_generators(M: int) -> List[Tuple[int, int]]:
    """Greedy generators of (Z/M)* with their orders, smallest first"""
    units = units_mod(M)
    if M <= 2:
        return []
    span = {1}
    gens: List[Tuple[int, int]] = []
    for u in units:
        if u in span:
            continue
        order, x = 1, u
        while x != 1:
            x = (x * u) % M
            order += 1
        gens.append((u, order))
        new_span = set(span)
        frontier = deque(span)
        while frontier:
            a = frontier.popleft()
            for g, _ in gens:
                b = (a * g) % M
                if b not in new_span:
                    new_span.add(b)
                    frontier.append(b)
        span = new_span
        if len(span) == len(units):
            break
    return gens


def unit_exponent(M: int) -> int:
    out = 1
    for _, order in unit_generators(M):
        out = lcm(out, order)
    return out


class Character:
    """chi(s, u) = chi_sign(s) * chi_units(u) on {+1, -1} x (Z/M)*"""

    def __init__(self, modulus: int, field: Field, sign_value, gen_values: Sequence, table: Optional[Dict[int, object]] = None):
        self.modulus = modulus
        self.field = field
        self.sign_value = field.convert(sign_value)
        self.gens = unit_generators(modulus)
        self.gen_values = tuple(field.convert(v) for v in gen_values)
        if len(self.gen_values) != len(self.gens):
            raise MathDomainError(f"expected {len(self.gens)} generator values for modulus {modulus}")
        if field.power(self.sign_value, 2) != field.one:
            raise MathDomainError("the sign value must square to 1")
        self._table = table if table is not None else self._build_table()
        if self._table is None:
            raise MathDomainError("generator values do not define a character")

    def _build_table(self) -> Optional[Dict[int, object]]:
        F, M = self.field, self.modulus
        for (g, order), v in zip(self.gens, self.gen_values):
            if F.power(v, order) != F.one:
                return None
        if M <= 2:
            return {1 % M: F.one}
        table = {1: F.one}
        queue = deque([1])
        while queue:
            a = queue.popleft()
            for (g, _), v in zip(self.gens, self.gen_values):
                b = (a * g) % M
                val = F.mul(table[a], v)
                if b in table:
                    if table[b] != val:
                        return None
                    continue
                table[b] = val
                queue.append(b)
        return table

    @classmethod
    def trivial(cls, modulus: int, field: Field) -> "Character":
        return cls(modulus, field, field.one, [field.one] * len(unit_generators(modulus)))

    def __call__(self, sign: int, u: int):
        """chi(sign, u mod M); u must be prime to M"""
        F = self.field
        u %= self.modulus
        if self.modulus > 1 and gcd(u, self.modulus) != 1:
            raise MathDomainError("determinant not prime to level")
        val = self._table[u] if self.modulus > 1 else F.one
        if sign < 0:
            val = F.mul(val, self.sign_value)
        return val

    def of_det(self, det: int):
        return self(1 if det > 0 else -1, det)

    def __mul__(self, other: "Character") -> "Character":
        if other.modulus != self.modulus or other.field is not self.field:
            raise MathDomainError("characters live on different groups")
        F = self.field
        return Character(
            self.modulus,
            F,
            F.mul(self.sign_value, other.sign_value),
            [F.mul(a, b) for a, b in zip(self.gen_values, other.gen_values)],
        )

    def inverse(self) -> "Character":
        F = self.field
        return Character(self.modulus, F, F.inv(self.sign_value), [F.inv(v) for v in self.gen_values])

    @property
    def is_trivial(self) -> bool:
        F = self.field
        return self.sign_value == F.one and all(v == F.one for v in self.gen_values)

    def sort_key(self):
        F = self.field
        return (F.sort_key(self.sign_value), tuple(F.sort_key(v) for v in self.gen_values))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.modulus == other.modulus
            and self.sign_value == other.sign_value
            and self.gen_values == other.gen_values
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.field.to_str(self.sign_value), tuple(self.field.to_str(v) for v in self.gen_values)))

    def __repr__(self) -> str:
        vals = ",".join(f"{g}:{self.field.to_str(v)}" for (g, _), v in zip(self.gens, self.gen_values))
        return f"Character(mod {self.modulus}, sign {self.field.to_str(self.sign_value)}, {vals})"

    def to_record(self) -> dict:
        return {
            "modulus": self.modulus,
            "field": self.field.name,
            "sign": self.field.to_str(self.sign_value),
            "values": {str(g): self.field.to_str(v) for (g, _), v in zip(self.gens, self.gen_values)},
        }


def all_characters(modulus: int, field: Field, signs: Sequence[int] = (1, -1)) -> List[Character]:
    """Every character with values in the field, ordered by value tuples, trivial first"""
    F = field
    gens = unit_generators(modulus)
    sign_values = [F.one] if -1 not in signs else F.roots_of_unity(2)
    choices = [F.roots_of_unity(order) for _, order in gens]
    out = []
    seen = set()
    for sv in sign_values:
        for vals in product(*choices):
            try:
                chi = Character(modulus, F, sv, vals)
            except MathDomainError:
                continue
            if chi in seen:
                continue
            seen.add(chi)
            out.append(chi)
    return sorted(out, key=lambda c: c.sort_key())


def character_field(modulus: int, characteristic: int) -> Field:
    """Smallest field of the given characteristic holding all character values mod M"""
    if characteristic == 0:
        return QQ_FIELD
    exponent = unit_exponent(modulus)
    m = exponent
    while m % characteristic == 0:
        m //= characteristic
    return finite_field(characteristic, extension_degree_for(characteristic, max(m, 1)))
