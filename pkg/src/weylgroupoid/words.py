"""Walking words through a Cartan scheme.

A word ``(i1, ..., im)`` at a target object X denotes the morphism
``id_X s_i1 ... s_im``; its k-th factor s_ik acts from the object
Y_k = r_ik ... r_i1 (X) to Y_{k-1}.  Because row i of the Cartan matrix is
the same at Y and r_i(Y), the reflection matrix of each factor can be read
off at either end.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidWord
from .lattice import LatticeMap, Vector, is_positive, negate, positive_part, unit


def check_word(scheme, word: Sequence[int]) -> tuple:
    word = tuple(int(i) for i in word)
    for i in word:
        if not 0 <= i < scheme.rank:
            raise InvalidWord(f"letter {i} outside 0..{scheme.rank - 1}")
    return word


def walk(scheme, x: int, word: Sequence[int]):
    """Return (betas, matrix, source) of the word at target x.

    betas[k] = s_i1 ... s_i(k) (alpha_i(k+1)) with 0-based k.
    """
    word = check_word(scheme, word)
    n = scheme.rank
    m = LatticeMap.identity(n)
    betas = []
    y = x
    for i in word:
        betas.append(m(unit(i, n)))
        m = m @ scheme.reflection(i, y)
        y = scheme.r(i, y)
    return betas, m, y


def lambda_from_betas(betas: Sequence[Vector]) -> tuple:
    """Positive lambda that equal +-beta_k for an odd number of k (sorted)."""
    counts: dict = {}
    for b in betas:
        p = positive_part(b)
        if p is not None:
            counts[p] = counts.get(p, 0) + 1
    return tuple(sorted(p for p, c in counts.items() if c % 2))


def lambda_parity(scheme, x: int, word: Sequence[int]) -> tuple:
    betas, _, _ = walk(scheme, x, word)
    return lambda_from_betas(betas)


def lambda_recursive(scheme, x: int, word: Sequence[int]) -> tuple:
    """Lambda_+ via the left-peeling recursion on the first letter.

    Only meaningful for schemes carrying a root system.
    """
    word = check_word(scheme, word)
    n = scheme.rank
    # objects along the word: ys[k] is the target of the suffix word[k:]
    ys = [x]
    for i in word:
        ys.append(scheme.r(i, ys[-1]))
    current: frozenset = frozenset()
    for k in range(len(word) - 1, -1, -1):
        i = word[k]
        s = scheme.reflection(i, ys[k + 1])
        a = unit(i, n)
        if a in current:
            current = frozenset(s(v) for v in current if v != a)
        else:
            current = frozenset(s(v) for v in current) | {a}
    return tuple(sorted(current))


def positive_betas(betas: Sequence[Vector]) -> bool:
    return all(is_positive(b) for b in betas)


def admissible_betas(betas: Sequence[Vector]) -> bool:
    seen = set()
    for b in betas:
        if negate(b) in seen:
            return False
        seen.add(b)
    return True
