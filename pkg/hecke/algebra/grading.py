"""Class-group grading of Hecke algebras, eigensystems and their character twists.

Over Q the class group is trivial. The grading machinery also runs over
synthetic finite abelian groups C = Z/n_1 x ... x Z/n_k, where each prime is
assigned a class and the class of a determinant is read off its factorization.
"""

from dataclasses import dataclass, field as dc_field
from itertools import product
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import factorint

from hecke.constants import logger
from hecke.errors import MathDomainError
from hecke.exact.fields import Field, QQ_FIELD, multiplicative_order
from hecke.modgroup.gmat import GMat
from hecke.modgroup.groups import GroupDescriptor
from hecke.algebra.cosets import DoubleCosetSum, decompose

ClassElement = Tuple[int, ...]


class SyntheticClassGroup:
    """Finite abelian group with a multiplicative grading on nonzero integers"""

    def __init__(self, invariants: Sequence[int] = (), prime_classes: Optional[Dict[int, Sequence[int]]] = None):
        self.invariants = tuple(int(n) for n in invariants)
        if any(n < 1 for n in self.invariants):
            raise MathDomainError(f"bad invariants {self.invariants}")
        self.prime_classes = {int(p): self.reduce(c) for p, c in (prime_classes or {}).items()}

    @classmethod
    def trivial(cls) -> "SyntheticClassGroup":
        return cls(())

    @property
    def order(self) -> int:
        out = 1
        for n in self.invariants:
            out *= n
        return out

    @property
    def identity(self) -> ClassElement:
        return tuple(0 for _ in self.invariants)

    def reduce(self, c: Sequence[int]) -> ClassElement:
        return tuple(int(x) % n for x, n in zip(c, self.invariants))

    def add(self, a: ClassElement, b: ClassElement) -> ClassElement:
        return self.reduce([x + y for x, y in zip(a, b)])

    def neg(self, a: ClassElement) -> ClassElement:
        return self.reduce([-x for x in a])

    def elements(self) -> List[ClassElement]:
        return [tuple(c) for c in product(*[range(n) for n in self.invariants])]

    def grade_of_det(self, d: int) -> ClassElement:
        """Class of the ideal (d); units and unassigned primes grade to the identity"""
        if d == 0:
            raise MathDomainError("singular")
        out = self.identity
        for p, e in factorint(abs(d)).items():
            c = self.prime_classes.get(p, self.identity)
            out = self.add(out, tuple(e * x for x in c))
        return out

    def grade(self, delta: GMat) -> ClassElement:
        return self.grade_of_det(delta.det)

    def grade_of_sum(self, T: DoubleCosetSum) -> ClassElement:
        grades = {self.grade(rep) for _, rep in T.terms}
        if len(grades) != 1:
            raise MathDomainError("double coset sum is not homogeneous for the grading")
        return grades.pop()


class ClassCharacter:
    """A character C -> F*, fixed by its values on the cyclic generators"""

    def __init__(self, group: SyntheticClassGroup, field: Field, values: Sequence):
        self.group = group
        self.field = field
        self.values = tuple(field.convert(v) for v in values)
        if len(self.values) != len(group.invariants):
            raise MathDomainError("one value per cyclic factor is required")
        for v, n in zip(self.values, group.invariants):
            if field.power(v, n) != field.one:
                raise MathDomainError(f"value {field.to_str(v)} has order not dividing {n}")

    @classmethod
    def trivial(cls, group: SyntheticClassGroup, field: Field = QQ_FIELD) -> "ClassCharacter":
        return cls(group, field, [field.one] * len(group.invariants))

    @classmethod
    def all(cls, group: SyntheticClassGroup, field: Field) -> List["ClassCharacter"]:
        """Every character with values in the field, trivial one first"""
        choices = [field.roots_of_unity(n) for n in group.invariants]
        return [cls(group, field, vals) for vals in product(*choices)]

    def __call__(self, c: ClassElement):
        F = self.field
        out = F.one
        for v, e in zip(self.values, c):
            out = F.mul(out, F.power(v, e))
        return out

    def __mul__(self, other: "ClassCharacter") -> "ClassCharacter":
        return ClassCharacter(self.group, self.field, [self.field.mul(a, b) for a, b in zip(self.values, other.values)])

    def inverse(self) -> "ClassCharacter":
        return ClassCharacter(self.group, self.field, [self.field.inv(a) for a in self.values])

    @property
    def is_trivial(self) -> bool:
        return all(v == self.field.one for v in self.values)

    def order(self) -> int:
        out = 1
        for v in self.values:
            out = lcm(out, multiplicative_order(self.field, v))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassCharacter) and self.values == other.values and self.group.invariants == other.group.invariants

    def __hash__(self) -> int:
        return hash(tuple(self.field.to_str(v) for v in self.values))

    def __repr__(self) -> str:
        return "ClassCharacter(" + ",".join(self.field.to_str(v) for v in self.values) + ")"


@dataclass(frozen=True, order=True)
class OperatorLabel:
    """T_p^(m) for a prime p, or T_a when kind == 'a' (p then holds a)"""

    p: int
    m: int = 1
    kind: str = "p"

    @property
    def det(self) -> int:
        return self.p**self.m if self.kind == "p" else self.p

    def __str__(self) -> str:
        if self.kind == "a":
            return f"Ta{self.p}"
        return f"T{self.p}" if self.m == 1 else f"T{self.p}^({self.m})"

    @classmethod
    def parse(cls, text: str) -> "OperatorLabel":
        text = text.strip()
        if text.startswith("Ta"):
            return cls(int(text[2:]), 1, "a")
        if text.startswith("T"):
            text = text[1:]
        if "^(" in text:
            p, m = text.split("^(")
            return cls(int(p), int(m.rstrip(")")))
        return cls(int(text))


@dataclass
class EigenSystem:
    """A partial algebra homomorphism: operator labels to field values"""

    field: Field
    values: Dict[OperatorLabel, object]
    grades: Dict[OperatorLabel, ClassElement] = dc_field(default_factory=dict)
    extension_degree: int = 1

    @property
    def labels(self) -> List[OperatorLabel]:
        return sorted(self.values)

    def value(self, label: OperatorLabel):
        return self.values[label]

    def grade(self, label: OperatorLabel, classes: Optional[SyntheticClassGroup] = None) -> ClassElement:
        if label in self.grades:
            return self.grades[label]
        if classes is None:
            return ()
        return classes.grade_of_det(label.det)

    def restrict(self, labels: Iterable[OperatorLabel]) -> "EigenSystem":
        labels = set(labels)
        return EigenSystem(
            self.field,
            {l: v for l, v in self.values.items() if l in labels},
            {l: g for l, g in self.grades.items() if l in labels},
            self.extension_degree,
        )

    def agrees_with(self, other: "EigenSystem", labels: Optional[Iterable[OperatorLabel]] = None) -> bool:
        labels = list(labels) if labels is not None else self.labels
        for l in labels:
            if l not in self.values or l not in other.values:
                return False
            if self.values[l] != other.values[l]:
                return False
        return True

    def to_record(self) -> dict:
        return {
            "field": self.field.name,
            "values": {str(l): self.field.to_str(v) for l, v in sorted(self.values.items())},
        }


def twist_eigensystem(chi: ClassCharacter, phi: EigenSystem) -> EigenSystem:
    """(chi x Phi)(T) = chi(grade T) Phi(T)"""
    F = phi.field
    values = {}
    for l, v in phi.values.items():
        values[l] = F.mul(F.convert(chi(phi.grade(l, chi.group))), v)
    grades = {l: phi.grade(l, chi.group) for l in phi.values}
    return EigenSystem(F, values, grades, phi.extension_degree)


def extract_twist(phi: EigenSystem, psi: EigenSystem, classes: SyntheticClassGroup) -> ClassCharacter:
    """The character chi with Phi = chi x Psi, read off the nonzero values of Psi"""
    F = phi.field
    ratios: Dict[ClassElement, object] = {}
    for l in psi.labels:
        if l not in phi.values:
            continue
        c = psi.grade(l, classes)
        a, b = phi.values[l], psi.values[l]
        if c == classes.identity:
            if a != b:
                raise MathDomainError(f"eigensystems disagree on the identity component at {l}")
            continue
        if F.is_zero(b):
            if not F.is_zero(a):
                raise MathDomainError("not a twist pair")
            continue
        r = F.div(a, b)
        if c in ratios and ratios[c] != r:
            raise MathDomainError("not a twist pair")
        ratios[c] = r
    for chi in ClassCharacter.all(classes, F):
        if all(chi(c) == r for c, r in ratios.items()):
            logger.debug(f"Extracted twist {chi} from {len(ratios)} graded classes")
            return chi
    raise MathDomainError("not a twist pair")


def double_coset_generators(T: DoubleCosetSum) -> List[Tuple[int, GMat]]:
    """Split a double coset sum into (coefficient, delta) with T = sum c Gamma delta Gamma'"""
    out = []
    rest = T
    while not rest.is_zero:
        c, delta = rest.terms[0]
        D = decompose(T.left, delta, T.right)
        out.append((c, delta))
        rest = rest - D.scale(c)
    return out


def restrict_to_gamma(
    T: DoubleCosetSum,
    classes: SyntheticClassGroup,
    c: ClassElement,
    c_prime: ClassElement,
    target: Optional[GroupDescriptor] = None,
) -> DoubleCosetSum:
    """The Gamma-level image of T in the component Delta_{c', c'c}.

    With matrix representatives over Q the idele labels are formal: the map
    relabels T and recomputes each double coset at the target group. The
    intersection is empty unless T lies in the graded component c.
    """
    grade = classes.grade_of_sum(T)
    if grade != classes.reduce(c):
        raise MathDomainError("wrong graded component")
    target = target or T.left
    logger.debug(f"Restricting {T} to {target.name} in component {c} from {c_prime}")
    if target == T.left and target == T.right:
        return DoubleCosetSum(T.left, T.right, {k: T.coefficient(k) for k in T.keys})
    result = DoubleCosetSum(target, target)
    for coeff, delta in double_coset_generators(T):
        result = result + decompose(target, delta, target).scale(coeff)
    return result
