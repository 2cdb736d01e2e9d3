"""Cartan schemes, built from explicit matrices or from a diagonal braiding."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Sequence

from . import scalars as sc
from .errors import (
    AxiomC1Violation,
    AxiomC2Violation,
    BoundExceeded,
    IndexOutOfRange,
    NotIFinite,
    TooManyObjects,
    UndefinedEntry,
)
from .lattice import LatticeMap, Matrix, reflection_matrix, validate_gcm

DEFAULT_EXPONENT_BOUND = 8
DEFAULT_MAX_OBJECTS = 10000


class BraidingMatrix:
    """Diagonal braiding q[i][j] = chi(alpha_i, alpha_j), entries in one scalar kind."""

    __slots__ = ("q", "rank")

    def __init__(self, q: Sequence[Sequence]):
        rows = [[e if isinstance(e, (sc.Scalar, Fraction)) else sc.parse_scalar(e) for e in row]
                for row in q]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("braiding matrix must be square and non-empty")
        if any(isinstance(e, Fraction) for r in rows for e in r):
            rows = [[_as_fraction(e) for e in r] for r in rows]
        self.q = tuple(tuple(r) for r in rows)
        self.rank = n

    @property
    def mode(self) -> str:
        modes = {sc.mode_of(e) for r in self.q for e in r}
        if "rational" in modes:
            return "rational"
        return "generic_q" if "generic_q" in modes else "root_of_unity"

    def __getitem__(self, ij):
        i, j = ij
        return self.q[i][j]

    def chi(self, u: Sequence[int], v: Sequence[int]):
        """Bicharacter value prod q_ij^(u_i v_j)."""
        out = sc.one_like(self.q[0][0])
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b:
                    out = out * sc.power(self.q[i][j], a * b)
        return out

    def self_braiding(self, v: Sequence[int]):
        return self.chi(v, v)

    def twist_key(self) -> tuple:
        """(diagonal, products q_ij q_ji for i < j); invariant under twisting."""
        n = self.rank
        diag = tuple(self.q[i][i] for i in range(n))
        prods = tuple(self.q[i][j] * self.q[j][i] for i in range(n) for j in range(i + 1, n))
        return diag, prods

    def __eq__(self, other):
        return isinstance(other, BraidingMatrix) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return f"BraidingMatrix({[[str(e) for e in r] for r in self.q]})"


def _as_fraction(e):
    if isinstance(e, Fraction):
        return e
    if e.power == 0 and e.root in (0, Fraction(1, 2)):
        return Fraction(1) if e.root == 0 else Fraction(-1)
    raise ValueError(f"cannot mix {e} with rational entries in one braiding matrix")


def diagonal_cartan_entry(q: BraidingMatrix, i: int, j: int,
                          bound: int = DEFAULT_EXPONENT_BOUND) -> int:
    """Cartan entry a_ij of a diagonal braiding.

    a_ij = -min{m >= 0 : (m+1)_{q_ii} (q_ii^m q_ij q_ji - 1) = 0}; raises
    BoundExceeded when the minimum is larger than ``bound``.
    """
    n = q.rank
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"({i}, {j}) outside rank {n}")
    if i == j:
        return 2
    qii = q[i, i]
    prod = q[i, j] * q[j, i]
    for m in range(bound + 1):
        if sc.quantum_integer_vanishes(qii, m + 1):
            return -m
        if sc.is_one(sc.power(qii, m) * prod):
            return -m
    raise BoundExceeded(i, j, bound)


def cartan_row(q: BraidingMatrix, i: int, bound: int = DEFAULT_EXPONENT_BOUND) -> tuple:
    return tuple(diagonal_cartan_entry(q, i, j, bound) for j in range(q.rank))


def reflect_braiding(q: BraidingMatrix, i: int, a_row: Sequence[int | None]) -> BraidingMatrix:
    """Pull the bicharacter back along s_i: q'_jk = chi(s_i alpha_j, s_i alpha_k)."""
    if any(a is None for a in a_row):
        raise UndefinedEntry(f"Cartan row {i} has undefined entries")
    n = q.rank
    new = [[None] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            new[j][k] = (q[j, k] * sc.power(q[i, k], -a_row[j]) * sc.power(q[j, i], -a_row[k])
                         * sc.power(q[i, i], a_row[j] * a_row[k]))
    return BraidingMatrix(new)


@dataclass(frozen=True)
class SchemeObject:
    id: Hashable
    cartan: Matrix
    braiding: BraidingMatrix | None = None
    twist_key: tuple | None = None


@dataclass(frozen=True)
class CartanScheme:
    """Objects are referred to by their position in ``objects``.

    ``maps[i][x]`` is the position of r_i(objects[x]).
    """

    rank: int
    objects: tuple
    maps: tuple
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.objects)

    def index(self, obj) -> int:
        """Position of an object given by id (preferred) or by position."""
        for k, o in enumerate(self.objects):
            if o.id == obj or str(o.id) == str(obj):
                return k
        if isinstance(obj, int) and 0 <= obj < self.size:
            return obj
        raise KeyError(f"unknown object {obj!r}")

    def cartan(self, x: int) -> Matrix:
        return self.objects[x].cartan

    def braiding(self, x: int) -> BraidingMatrix | None:
        return self.objects[x].braiding

    @property
    def has_braiding(self) -> bool:
        return all(o.braiding is not None for o in self.objects)

    def r(self, i: int, x: int) -> int:
        return self.maps[i][x]

    def reflection(self, i: int, x: int) -> LatticeMap:
        key = ("s", i, x)
        s = self._cache.get(key)
        if s is None:
            s = reflection_matrix(self.objects[x].cartan, i)
            self._cache[key] = s
        return s

    def follow(self, x: int, word: Sequence[int]) -> int:
        """Object reached from x by applying r_{w1}, then r_{w2}, ..."""
        for i in word:
            x = self.maps[i][x]
        return x

    def components(self) -> list:
        seen, comps = set(), []
        for start in range(self.size):
            if start in seen:
                continue
            comp, todo = [], [start]
            seen.add(start)
            while todo:
                x = todo.pop()
                comp.append(x)
                for i in range(self.rank):
                    y = self.maps[i][x]
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            comps.append(sorted(comp))
        return comps

    def is_standard(self) -> bool:
        return len({o.cartan for o in self.objects}) == 1


def check_axioms(scheme: CartanScheme) -> list:
    """Return every (axiom, witness) violation; an empty list means valid."""
    report = []
    for i in range(scheme.rank):
        for x in range(scheme.size):
            y = scheme.maps[i][x]
            if scheme.maps[i][y] != x:
                report.append(("C1", {"i": i, "object": scheme.objects[x].id}))
            for j in range(scheme.rank):
                if scheme.cartan(x)[i][j] != scheme.cartan(y)[i][j]:
                    report.append(("C2", {"i": i, "j": j, "object": scheme.objects[x].id}))
    return report


def build_from_matrices(objects, maps, rank: int | None = None) -> CartanScheme:
    """Build a scheme from ``[(id, gcm), ...]`` and one r_i table per generator.

    Each table is either a mapping id -> id or a sequence of ids/positions.
    Raises the first (C1) or (C2) violation found.
    """
    objs = []
    for oid, A in objects:
        objs.append(SchemeObject(oid, validate_gcm(A)))
    if not objs:
        raise ValueError("a Cartan scheme needs at least one object")
    n = len(objs[0].cartan) if rank is None else rank
    if any(len(o.cartan) != n for o in objs):
        raise ValueError("all Cartan matrices must have the same rank")
    if len(maps) != n:
        raise ValueError(f"expected {n} reflection tables, got {len(maps)}")
    pos = {o.id: k for k, o in enumerate(objs)}
    tables = []
    for table in maps:
        if isinstance(table, dict):
            row = [pos[table[o.id]] for o in objs]
        else:
            row = [pos[t] if t in pos else int(t) for t in table]
        if len(row) != len(objs) or any(not 0 <= t < len(objs) for t in row):
            raise ValueError("reflection table is not total on the objects")
        tables.append(tuple(row))
    scheme = CartanScheme(n, tuple(objs), tuple(tables))
    for axiom, w in check_axioms(scheme):
        if axiom == "C1":
            raise AxiomC1Violation(w["i"], w["object"])
        raise AxiomC2Violation(w["i"], w["j"], w["object"])
    return scheme


def build_from_braiding(q: BraidingMatrix, max_objects: int = DEFAULT_MAX_OBJECTS,
                        exponent_bound: int = DEFAULT_EXPONENT_BOUND) -> CartanScheme:
    """Breadth-first closure of q under all reflections, objects up to twisting."""
    n = q.rank
    keys = {q.twist_key(): 0}
    braidings = [q]
    cartans = []
    maps = [[None] * 0 for _ in range(n)]
    todo = deque([0])
    while todo:
        x = todo.popleft()
        b = braidings[x]
        rows = []
        for i in range(n):
            try:
                rows.append(cartan_row(b, i, exponent_bound))
            except BoundExceeded as e:
                raise NotIFinite(x, e.i, e.j) from e
        cartans.append(tuple(rows))
        for i in range(n):
            nb = reflect_braiding(b, i, rows[i])
            key = nb.twist_key()
            y = keys.get(key)
            if y is None:
                y = len(braidings)
                if y >= max_objects:
                    raise TooManyObjects(max_objects)
                keys[key] = y
                braidings.append(nb)
                todo.append(y)
            maps[i].append(y)
    objs = tuple(SchemeObject(k, validate_gcm(cartans[k]), braidings[k], braidings[k].twist_key())
                 for k in range(len(braidings)))
    scheme = CartanScheme(n, objs, tuple(tuple(m) for m in maps))
    return scheme
