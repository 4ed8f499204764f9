"""Finite presentations: SL2(Z), GL2(Z), and Reidemeister-Schreier subgroup presentations"""

from abc import ABC, abstractmethod
from typing import Dict, Iterator, List, Sequence, Tuple

from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from hecke.constants import SignPolicy, logger
from hecke.errors import InternalError, MathDomainError
from hecke.exact.fields import QQ_FIELD
from hecke.finite_groups import det_mod, gl2_mod, matrix_group
from hecke.modgroup.coset_table import CosetTable
from hecke.modgroup.gmat import GMat, mat_power
from hecke.modgroup.words import J, S, U, to_presentation_letters, word_decompose

GenWord = List[Tuple[int, int]]  # (generator index, exponent)


def unit_letters(word: Sequence[Tuple[int, int]]) -> Iterator[Tuple[int, int]]:
    """Expand (index, e) into |e| letters of exponent +-1"""
    for k, e in word:
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            yield k, step


def compress_word(word: Sequence[Tuple[int, int]]) -> GenWord:
    out: GenWord = []
    for k, e in word:
        if e == 0:
            continue
        if out and out[-1][0] == k:
            e += out.pop()[1]
            if e == 0:
                continue
        out.append((k, e))
    return out


class Presentation(ABC):
    """Generators realized as integer matrices, plus relator words"""

    def __init__(self, names: Sequence[str], matrices: Sequence[GMat], relators: Sequence[GenWord]):
        self.names = list(names)
        self.matrices = list(matrices)
        self.relators = [compress_word(r) for r in relators]
        self._inverses = [m.inverse() for m in self.matrices]

    @property
    def n_generators(self) -> int:
        return len(self.matrices)

    def inverse_matrix(self, k: int) -> GMat:
        return self._inverses[k]

    @abstractmethod
    def word_for(self, g: GMat) -> GenWord:
        """A word in the generators evaluating to g"""

    def evaluate(self, word: Sequence[Tuple[int, int]]) -> GMat:
        n = self.matrices[0].n if self.matrices else 2
        result = GMat.identity(n)
        for k, e in word:
            result = result @ mat_power(self.matrices[k], e)
        return result

    def verify_relators(self) -> bool:
        n = self.matrices[0].n if self.matrices else 2
        one = GMat.identity(n)
        return all(self.evaluate(r) == one for r in self.relators)

    def word_to_str(self, word: Sequence[Tuple[int, int]]) -> str:
        if not word:
            return "1"
        return " ".join(self.names[k] if e == 1 else f"{self.names[k]}^{e}" for k, e in word)

    def abelianization_rank(self) -> int:
        """Free rank of the abelianization: generators minus the rank of the relation matrix"""
        if not self.relators:
            return self.n_generators
        rows = []
        for r in self.relators:
            row = [0] * self.n_generators
            for k, e in r:
                row[k] += e
            rows.append(row)
        return self.n_generators - QQ_FIELD.rank(QQ_FIELD.matrix(rows))


class AmbientPresentation(Presentation):
    """SL2(Z) = <S, U | S^4, U^6, S^2 U^-3>, optionally extended by J = diag(1, -1) to GL2(Z)"""

    def __init__(self, policy: SignPolicy):
        self.policy = policy
        names = ["S", "U"]
        matrices = [S, U]
        # S=0, U=1, J=2
        relators: List[GenWord] = [[(0, 4)], [(1, 6)], [(0, 2), (1, -3)]]
        if policy == SignPolicy.GL:
            names.append("J")
            matrices.append(J)
            relators += [
                [(2, 2)],
                [(2, 1), (0, 1), (2, 1), (0, 1)],
                [(2, 1), (1, 1), (2, 1), (0, -1), (1, 1), (0, 1)],
            ]
        super().__init__(names, matrices, relators)
        self._symbol_index = {name: k for k, name in enumerate(names)}

    @classmethod
    def sl2(cls) -> "AmbientPresentation":
        return _AMBIENT[SignPolicy.SL]

    @classmethod
    def gl2(cls) -> "AmbientPresentation":
        return _AMBIENT[SignPolicy.GL]

    @classmethod
    def for_policy(cls, policy: SignPolicy) -> "AmbientPresentation":
        return _AMBIENT[SignPolicy(policy)]

    def word_for(self, g: GMat) -> GenWord:
        if self.policy == SignPolicy.SL and g.det != 1:
            raise MathDomainError(f"{g} is not in SL2(Z)")
        letters = to_presentation_letters(word_decompose(g))
        return [(self._symbol_index[sym], e) for sym, e in letters]

    def image_mod(self, N: int) -> List[Tuple[int, ...]]:
        """The image of the ambient group in GL2(Z/N): det = 1, or det = +-1"""
        allowed = {1 % N} if self.policy == SignPolicy.SL else {1 % N, (-1) % N}
        return [a for a in gl2_mod(N) if det_mod(a, N) in allowed]

    def verify_surjection(self, N: int) -> bool:
        """The generators reduce to a generating set of the ambient image mod N"""
        generated = matrix_group(N, [m.mod(N) for m in self.matrices], name=f"<{','.join(self.names)}> mod {N}")
        return generated.order == len(self.image_mod(N))

    def sl2_index(self) -> int:
        """Index of <S, U> in the presented group, by Todd-Coxeter coset enumeration"""
        F, *gens = free_group(" ".join(n.lower() for n in self.names))
        rels = []
        for r in self.relators:
            w = F.identity
            for k, e in r:
                w = w * gens[k] ** e
            rels.append(w)
        G = FpGroup(F, rels)
        C = G.coset_enumeration([gens[0], gens[1]])
        C.compress()
        return len(C.table)


_AMBIENT: Dict[SignPolicy, AmbientPresentation] = {
    SignPolicy.SL: AmbientPresentation(SignPolicy.SL),
    SignPolicy.GL: AmbientPresentation(SignPolicy.GL),
}


class SubgroupPresentation(Presentation):
    """Reidemeister-Schreier presentation of a finite-index subgroup.

    Generators are the non-tree edges s_{i,x} = g_i x g_{i.x}^-1 of the coset
    table, sorted by (i, x); relators are the ambient relators rewritten from
    every coset.
    """

    def __init__(self, table: CosetTable, ambient: AmbientPresentation):
        self.table = table
        self.ambient = ambient
        edges = [
            (i, k)
            for i in range(table.index)
            for k in range(ambient.n_generators)
            if not table.is_tree_edge(i, k)
        ]
        self.edges = edges
        self._edge_index = {e: t for t, e in enumerate(edges)}
        names = [f"s{i}{ambient.names[k]}" for i, k in edges]
        matrices = [
            table.reps[i] @ ambient.matrices[k] @ table.reps[table.table[i][k]].inverse() for i, k in edges
        ]
        relators = []
        for i in range(table.index):
            for r in ambient.relators:
                word, end = self.rewrite(r, i)
                if end != i:
                    raise InternalError(f"relator {ambient.word_to_str(r)} does not close at coset {i}")
                if word:
                    relators.append(word)
        super().__init__(names, matrices, relators)
        if not self.verify_relators():
            raise InternalError("Reidemeister-Schreier relator does not evaluate to the identity")
        logger.debug(f"Subgroup presentation: {len(names)} generators, {len(self.relators)} relators")

    def rewrite(self, word: Sequence[Tuple[int, int]], start: int = 0) -> Tuple[GenWord, int]:
        """Rewrite an ambient word read from coset ``start``; returns the word and the end coset"""
        out: GenWord = []
        i = start
        for k, e in unit_letters(word):
            if e > 0:
                edge = (i, k)
                j = self.table.table[i][k]
                if edge in self._edge_index:
                    out.append((self._edge_index[edge], 1))
            else:
                j = self.table.inv_table[i][k]
                edge = (j, k)
                if edge in self._edge_index:
                    out.append((self._edge_index[edge], -1))
            i = j
        return compress_word(out), i

    def word_for(self, g: GMat) -> GenWord:
        word, end = self.rewrite(self.ambient.word_for(g), 0)
        if end != 0:
            raise MathDomainError(f"{g} is not in the subgroup")
        return word
