"""Exact linear algebra on sparse vectors {key: coefficient}.

Coefficients may be Fractions or cyclotomic field elements; only the field
operations and truth testing are used.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def inverse(x):
    # plain ints would divide to floats
    return Fraction(1, x) if isinstance(x, int) else 1 / x


def axpy(y: dict, a, x: dict) -> dict:
    """y + a*x as a new vector with zero entries dropped."""
    out = dict(y)
    for k, v in x.items():
        s = out.get(k, 0) + a * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def scale(a, x: dict) -> dict:
    if not a:
        return {}
    return {k: a * v for k, v in x.items()}


def is_zero(x: dict) -> bool:
    return not any(x.values())


class Subspace:
    """Incrementally built span in semi-echelon form.

    Each stored row has a pivot key where it equals one and where every later
    row vanishes, so reducing a vector against the rows in insertion order
    clears all pivots.
    """

    def __init__(self, vectors: Iterable[dict] = ()):
        self.rows: list = []  # (pivot, row)
        self.basis: list = []  # the vectors as inserted, one per row
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        for pivot, row in self.rows:
            c = v.get(pivot)
            if c:
                v = axpy(v, -c, row)
        return v

    def add(self, v: dict) -> bool:
        """Insert v; returns False when v was already in the span."""
        r = self.reduce(v)
        if not r:
            return False
        pivot = min(r)
        inv = inverse(r[pivot])
        self.rows.append((pivot, scale(inv, r)))
        self.basis.append(v)
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def copy(self) -> "Subspace":
        s = Subspace()
        s.rows = list(self.rows)
        s.basis = list(self.basis)
        return s


def rank(vectors: Iterable[dict]) -> int:
    return Subspace(vectors).dim


def nullspace(columns: list) -> list:
    """Basis of {c : sum_k c[k] * columns[k] = 0}, each a list of coefficients.

    Gauss-Jordan elimination on the matrix whose k-th column is columns[k].
    """
    ncols = len(columns)
    keys = sorted({key for col in columns for key in col})
    rows = [[col.get(key, 0) for col in columns] for key in keys]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = inverse(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for k, pc in enumerate(pivots):
            vec[pc] = -rows[k][f]
        basis.append(vec)
    return basis


def combine(coeffs, vectors) -> dict:
    out: dict = {}
    for a, v in zip(coeffs, vectors):
        if a:
            out = axpy(out, a, v)
    return out
