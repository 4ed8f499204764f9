"""Words in S, T, J and their decomposition of unimodular 2 x 2 matrices"""

from typing import Dict, List, Sequence, Tuple

from hecke.errors import MathDomainError
from hecke.modgroup.gmat import GMat, mat_power

Letter = Tuple[str, int]  # (symbol, exponent)
Word = List[Letter]

S = GMat([[0, -1], [1, 0]])
T = GMat([[1, 1], [0, 1]])
U = S @ T  # (0,-1;1,1)
J = GMat.diag(1, -1)
I2 = GMat.identity(2)

SYMBOLS: Dict[str, GMat] = {"S": S, "T": T, "U": U, "J": J}


def compress(word: Sequence[Letter]) -> Word:
    """Merge adjacent powers of the same symbol and drop trivial letters"""
    out: Word = []
    for sym, e in word:
        if e == 0:
            continue
        if out and out[-1][0] == sym:
            e += out.pop()[1]
            if e == 0:
                continue
        out.append((sym, e))
    return out


def evaluate_word(word: Sequence[Letter], symbols: Dict[str, GMat] = SYMBOLS) -> GMat:
    """Left-to-right matrix product of the letters"""
    result = I2
    for sym, e in word:
        result = result @ mat_power(symbols[sym], e)
    return result


def invert_word(word: Sequence[Letter]) -> Word:
    return [(sym, -e) for sym, e in reversed(word)]


def word_to_str(word: Sequence[Letter]) -> str:
    if not word:
        return "1"
    return " ".join(sym if e == 1 else f"{sym}^{e}" for sym, e in word)


def word_decompose(g: GMat) -> Word:
    """Word in S, T (and a trailing J when det g = -1) whose product is g.

    Continued-fraction reduction of the bottom row: right-multiply by
    T^-q and S until the lower-left entry vanishes.
    """
    if g.n != 2 or not g.is_unit:
        raise MathDomainError(f"word_decompose needs det +-1, got {g}")
    if g.det == -1:
        return compress(word_decompose(g @ J) + [("J", 1)])
    (a, b), (c, d) = g.rows
    applied: Word = []
    while c != 0:
        q = d // c
        if q:
            b, d = b - q * a, d - q * c
            applied.append(("T", -q))
        a, b, c, d = b, -a, d, -c
        applied.append(("S", 1))
    if a == 1:
        head: Word = [("T", b)]
    else:
        head = [("S", 2), ("T", -b)]
    return compress(head + invert_word(applied))


def to_presentation_letters(word: Sequence[Letter]) -> List[Tuple[str, int]]:
    """Rewrite S, T, J letters into the generators S, U, J (T = S^-1 U)"""
    out: Word = []
    for sym, e in word:
        if sym == "T":
            unit = [("S", -1), ("U", 1)] if e > 0 else [("U", -1), ("S", 1)]
            for _ in range(abs(e)):
                out.extend(unit)
        else:
            out.append((sym, e))
    return compress(out)
