"""Integer lattice primitives.

Root vectors are plain tuples of Python ints (coefficients over the
standard basis), so they hash, sort lexicographically and never overflow.
Indices are 0-based throughout the library.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NotGCM, RankMismatch

Vector = tuple  # tuple[int, ...]
Matrix = tuple  # tuple[tuple[int, ...], ...]


def unit(i: int, rank: int) -> Vector:
    return tuple(1 if k == i else 0 for k in range(rank))


def zero(rank: int) -> Vector:
    return (0,) * rank


def is_positive(v: Sequence[int]) -> bool:
    """True iff all coordinates are >= 0 and at least one is nonzero."""
    return all(c >= 0 for c in v) and any(v)


def is_negative(v: Sequence[int]) -> bool:
    return is_positive(negate(v))


def negate(v: Sequence[int]) -> Vector:
    return tuple(-c for c in v)


def add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(k: int, v: Sequence[int]) -> Vector:
    return tuple(k * c for c in v)


def total_degree(v: Sequence[int]) -> int:
    return sum(v)


def positive_part(v: Sequence[int]) -> Vector | None:
    """Return whichever of v, -v is positive, or None if neither is."""
    v = tuple(v)
    if is_positive(v):
        return v
    if is_positive(negate(v)):
        return negate(v)
    return None


def validate_gcm(A: Iterable[Iterable[int]]) -> Matrix:
    """Check the generalized Cartan matrix axioms and return A as a tuple matrix.

    Raises NotGCM naming the first offending entry.
    """
    A = tuple(tuple(int(x) for x in row) for row in A)
    n = len(A)
    if n == 0:
        raise NotGCM(None, None, "empty matrix")
    for i, row in enumerate(A):
        if len(row) != n:
            raise NotGCM(i, None, "matrix is not square")
    for i in range(n):
        if A[i][i] != 2:
            raise NotGCM(i, i, "diagonal entry is not 2")
        for j in range(n):
            if i == j:
                continue
            if A[i][j] > 0:
                raise NotGCM(i, j, "positive off-diagonal entry")
            if (A[i][j] == 0) != (A[j][i] == 0):
                raise NotGCM(i, j, "entry vanishes but its transpose does not")
    return A


class LatticeMap:
    """An element of GL(Z^n), acting on column vectors."""

    __slots__ = ("matrix", "_hash")

    def __init__(self, matrix: Iterable[Iterable[int]]):
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self._hash = hash(self.matrix)

    @classmethod
    def identity(cls, rank: int) -> "LatticeMap":
        return cls(tuple(unit(i, rank) for i in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def __call__(self, v: Sequence[int]) -> Vector:
        if len(v) != self.rank:
            raise RankMismatch(f"vector of length {len(v)} for map of rank {self.rank}")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.matrix)

    def __matmul__(self, other: "LatticeMap") -> "LatticeMap":
        if other.rank != self.rank:
            raise RankMismatch(f"cannot compose maps of rank {self.rank} and {other.rank}")
        cols = list(zip(*other.matrix))
        return LatticeMap(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.matrix
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, LatticeMap) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"LatticeMap({[list(r) for r in self.matrix]})"

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    def is_identity(self) -> bool:
        return self == LatticeMap.identity(self.rank)

    def determinant(self) -> int:
        return _det([list(r) for r in self.matrix])


def _det(m: list) -> int:
    # Bareiss elimination; exact over the integers.
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def reflection_matrix(A: Matrix, i: int) -> LatticeMap:
    """The map alpha_j -> alpha_j - A[i][j] alpha_i."""
    n = len(A)
    if not 0 <= i < n:
        raise IndexOutOfRange(f"generator index {i} outside 0..{n - 1}")
    rows = [list(unit(r, n)) for r in range(n)]
    for j in range(n):
        rows[i][j] -= A[i][j]
    return LatticeMap(rows)


def apply_word(maps: Sequence[LatticeMap], v: Sequence[int]) -> Vector:
    """Apply maps[0] o maps[1] o ... o maps[-1] to v.

    The list is read as a written product, so the last map acts first.
    """
    v = tuple(v)
    for m in reversed(maps):
        v = m(v)
    return v


def compose(maps: Sequence[LatticeMap], rank: int) -> LatticeMap:
    out = LatticeMap.identity(rank)
    for m in maps:
        out = out @ m
    return out


def format_root(v: Sequence[int]) -> str:
    """Render k*a1 + l*a2 in the compact 1^k 2^l notation."""
    parts = []
    for idx, c in enumerate(v, start=1):
        if c == 0:
            continue
        parts.append(f"{idx}" if c == 1 else f"{idx}^{c}")
    return " ".join(parts) if parts else "0"


def parse_root(text: str, rank: int) -> Vector:
    """Inverse of format_root; a leading '-' negates, e.g. "-1 2^-1" is -a1 + a2."""
    s = text.strip()
    sign = 1
    if s.startswith("-"):
        sign, s = -1, s[1:].strip()
    v = [0] * rank
    if s == "0":
        return tuple(v)
    for tok in s.split():
        idx, _, exp = tok.partition("^")
        i = int(idx) - 1
        if not 0 <= i < rank:
            raise ValueError(f"generator {idx} outside rank {rank} in {text!r}")
        v[i] += int(exp) if exp else 1
    return tuple(sign * c for c in v)
