"""Right coset tables of finite-index congruence subgroups via their finite image"""

from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from hecke.constants import logger
from hecke.errors import MathDomainError
from hecke.finite_groups import ModMat, identity_mod, mat_mul_mod
from hecke.modgroup.gmat import GMat


class CosetTable:
    """Right cosets Gamma g_i of Gamma in an ambient group.

    Gamma is the full preimage of ``image`` (a subgroup of the ambient image
    in GL_n(Z/N)), so the coset of an ambient element is decided by the coset
    of its reduction. Representatives are built breadth-first over the
    ambient generators, which makes the transversal prefix closed (a
    Schreier transversal): ``parent[j] = (i, x)`` means g_j = g_i * x.
    """

    def __init__(self, level: int, image: Iterable[ModMat], generators: Sequence[GMat], n: int = 2):
        self.level = level
        self.generators = list(generators)
        self.image = list(image)
        N = level
        gen_images = [g.mod(N) for g in self.generators]
        self.reps: List[GMat] = [GMat.identity(n)]
        self.parent: List[Optional[Tuple[int, int]]] = [None]
        self._rep_images: List[ModMat] = [identity_mod(N, n)]
        self._orbit: Dict[ModMat, int] = {h: 0 for h in self.image}
        self.table: List[List[int]] = []
        queue = deque([0])
        while queue:
            i = queue.popleft()
            row = []
            for k, x in enumerate(gen_images):
                img = mat_mul_mod(self._rep_images[i], x, N)
                j = self._orbit.get(img)
                if j is None:
                    j = len(self.reps)
                    self.reps.append(self.reps[i] @ self.generators[k])
                    self._rep_images.append(img)
                    self.parent.append((i, k))
                    for h in self.image:
                        self._orbit[mat_mul_mod(h, img, N)] = j
                    queue.append(j)
                row.append(j)
            self.table.append(row)
        self.inv_table: List[List[int]] = [[0] * len(gen_images) for _ in self.reps]
        for i, row in enumerate(self.table):
            for k, j in enumerate(row):
                self.inv_table[j][k] = i
        logger.debug(f"Coset table at level {level}: index {self.index}")

    @property
    def index(self) -> int:
        return len(self.reps)

    def lookup(self, g: GMat) -> int:
        """Index i with g in Gamma g_i"""
        try:
            return self._orbit[g.mod(self.level)]
        except KeyError:
            raise MathDomainError(f"{g} is not in the ambient group") from None

    def lookup_image(self, img: ModMat) -> int:
        try:
            return self._orbit[img]
        except KeyError:
            raise MathDomainError(f"{img} is not in the ambient image") from None

    def is_tree_edge(self, i: int, k: int) -> bool:
        j = self.table[i][k]
        return self.parent[j] == (i, k)

    def rep_word(self, i: int) -> List[Tuple[int, int]]:
        """Generator indices (with exponent 1) spelling g_i along the tree"""
        word = []
        while self.parent[i] is not None:
            i, k = self.parent[i]
            word.append((k, 1))
        return list(reversed(word))
