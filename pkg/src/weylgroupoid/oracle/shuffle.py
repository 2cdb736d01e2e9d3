"""The quantum shuffle algebra of a diagonal braiding.

Elements are sparse dicts {word: coefficient} with words tuples of letter
indices.  The braiding is c(x (x) y) = chi(deg x, deg y) y (x) x; the shuffle
product obeys

    (a u) * (b v) = a (u * b v) + chi(deg(a u), b) b (a u * v)

and the coproduct is deconcatenation.  The Nichols algebra is the
subalgebra generated by the one-letter words.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .field import DEFAULT_GENERIC_VALUE, Embedding
from .linalg import axpy


def _acc(out: dict, key, val) -> None:
    s = out.get(key, 0) + val
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def word_degree(word: Sequence[int], rank: int) -> tuple:
    d = [0] * rank
    for i in word:
        d[i] += 1
    return tuple(d)


class ShuffleAlgebra:
    def __init__(self, q, generic_value=DEFAULT_GENERIC_VALUE):
        """``q`` is a BraidingMatrix; scalars are embedded into an exact field."""
        self.rank = q.rank
        emb = Embedding([e for row in q.q for e in row], generic_value)
        self.embedding = emb
        self.q = [[emb(q[i, j]) for j in range(self.rank)] for i in range(self.rank)]
        self._shuffle_words = lru_cache(maxsize=None)(self._shuffle_words_raw)

    # bicharacter ------------------------------------------------------------

    def chi(self, u: Sequence[int], v: Sequence[int]):
        out = 1
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    out = out * self.q[i][j] ** (a * b)
        return out

    def chi_letter_right(self, word: Sequence[int], j: int):
        """chi(deg word, alpha_j)."""
        out = 1
        for i in word:
            out = out * self.q[i][j]
        return out

    def chi_letter_left(self, i: int, word: Sequence[int]):
        """chi(alpha_i, deg word)."""
        out = 1
        for j in word:
            out = out * self.q[i][j]
        return out

    # products ---------------------------------------------------------------

    def letter(self, i: int) -> dict:
        return {(i,): 1}

    def one(self) -> dict:
        return {(): 1}

    def times_letter(self, x: dict, j: int) -> dict:
        """x * [j]: insert j after p letters with coefficient chi(deg w[p:], alpha_j)."""
        out: dict = {}
        for w, c in x.items():
            coeff = 1
            for p in range(len(w), -1, -1):
                nw = w[:p] + (j,) + w[p:]
                _acc(out, nw, c * coeff)
                if p:
                    coeff = coeff * self.q[w[p - 1]][j]
        return out

    def letter_times(self, i: int, x: dict) -> dict:
        """[i] * x: insert i after p letters with coefficient chi(alpha_i, deg w[:p])."""
        out: dict = {}
        for w, c in x.items():
            coeff = 1
            for p in range(len(w) + 1):
                nw = w[:p] + (i,) + w[p:]
                _acc(out, nw, c * coeff)
                if p < len(w):
                    coeff = coeff * self.q[i][w[p]]
        return out

    def _shuffle_words_raw(self, u: tuple, v: tuple) -> tuple:
        if not u:
            return ((v, 1),)
        if not v:
            return ((u, 1),)
        out: dict = {}
        a, b = u[0], v[0]
        for w, c in self._shuffle_words(u[1:], v):
            _acc(out, (a,) + w, c)
        k = self.chi_letter_right(u, b)
        for w, c in self._shuffle_words(u, v[1:]):
            _acc(out, (b,) + w, k * c)
        return tuple(sorted(out.items()))

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for u, a in x.items():
            for v, b in y.items():
                ab = a * b
                for w, c in self._shuffle_words(u, v):
                    _acc(out, w, ab * c)
        return out

    def power(self, x: dict, k: int) -> dict:
        out = self.one()
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def symmetrized(self, word: Sequence[int]) -> dict:
        """x_{w1} * x_{w2} * ... * x_{wn}, the image of a word under the symmetrizer."""
        out = self.one()
        for j in word:
            out = self.times_letter(out, j)
        return out

    def adjoint(self, i: int, y: dict, deg_y: Sequence[int]) -> dict:
        """ad x_i (y) = x_i y - chi(alpha_i, deg y) y x_i for homogeneous y."""
        k = 1
        for j, b in enumerate(deg_y):
            if b:
                k = k * self.q[i][j] ** b
        return axpy(self.letter_times(i, y), -k, self.times_letter(y, i))

    # coproduct --------------------------------------------------------------

    @staticmethod
    def right_strip(x: dict, j: int) -> dict:
        """(id (x) f_j) Delta: keep words ending in j and drop that letter."""
        return {w[:-1]: c for w, c in x.items() if w and w[-1] == j}

    @staticmethod
    def left_derivation(x: dict, j: int) -> dict:
        """(f_j (x) id) Delta: keep words starting with j and drop that letter."""
        return {w[1:]: c for w, c in x.items() if w and w[0] == j}

    @staticmethod
    def right_suffix_component(x: dict, suffix: tuple) -> dict:
        """(id (x) f_suffix) Delta for the dual of a word."""
        n = len(suffix)
        return {w[:-n]: c for w, c in x.items() if n <= len(w) and w[len(w) - n:] == suffix}
