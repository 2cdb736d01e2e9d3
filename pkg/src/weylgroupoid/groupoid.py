"""Morphisms, real roots and root-system checks for Weyl groupoids."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import LengthBoundExceeded, NotFinite
from .lattice import LatticeMap, is_positive, negate, unit
from .scheme import CartanScheme
from .words import lambda_parity, walk

DEFAULT_MAX_LENGTH = 64


@dataclass(frozen=True)
class Morphism:
    """``id_target s_word[0] ... s_word[-1]``, a map source -> target."""

    source: int
    target: int
    word: tuple
    matrix: LatticeMap
    lambda_key: tuple = ()

    @property
    def length(self) -> int:
        return len(self.word)


def _explore(scheme: CartanScheme, max_length: int) -> dict:
    """All morphisms of the groupoid, grouped by target.

    Breadth-first over left extensions w -> s_i w.  Morphisms are identified
    by (target, source, matrix), which is equality in the Weyl groupoid; each
    keeps its lexicographically least shortest word.  Raises
    LengthBoundExceeded unless the search saturates by length max_length.
    """
    cached = scheme._cache.get(("explore", max_length))
    if cached is not None:
        return cached
    n = scheme.rank
    ident = LatticeMap.identity(n)
    found = {x: {(x, ident): ()} for x in range(scheme.size)}
    level = [((), x, x, ident) for x in range(scheme.size)]
    length = 0
    while level:
        if length > max_length:
            raise LengthBoundExceeded(max_length)
        length += 1
        candidates: dict = {}
        for word, target, source, m in level:
            for i in range(n):
                t2 = scheme.r(i, target)
                m2 = scheme.reflection(i, target) @ m
                key = (t2, source, m2)
                if (source, m2) in found[t2]:
                    continue
                w2 = (i,) + word
                old = candidates.get(key)
                if old is None or w2 < old:
                    candidates[key] = w2
        level = []
        for (t2, source, m2), w2 in sorted(candidates.items(), key=lambda kv: kv[1]):
            found[t2][(source, m2)] = w2
            level.append((w2, t2, source, m2))
    out = {}
    for x in range(scheme.size):
        morphs = [Morphism(src, x, w, m, lambda_parity(scheme, x, w))
                  for (src, m), w in found[x].items()]
        morphs.sort(key=lambda f: (f.length, f.word))
        out[x] = morphs
    scheme._cache[("explore", max_length)] = out
    return out


def enumerate_morphisms_to(scheme: CartanScheme, x, max_length: int = DEFAULT_MAX_LENGTH) -> list:
    """Every morphism with target x, ordered by (length, word)."""
    return _explore(scheme, max_length)[scheme.index(x)]


@dataclass(frozen=True)
class RealRootSet:
    base: int
    roots: frozenset

    @property
    def positive(self) -> frozenset:
        return frozenset(r for r in self.roots if is_positive(r))

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.roots


def real_roots(scheme: CartanScheme, x, max_length: int = DEFAULT_MAX_LENGTH) -> RealRootSet:
    x = scheme.index(x)
    n = scheme.rank
    roots = {f.matrix(unit(i, n)) for f in enumerate_morphisms_to(scheme, x, max_length)
             for i in range(n)}
    return RealRootSet(x, frozenset(roots))


def all_real_roots(scheme: CartanScheme, max_length: int = DEFAULT_MAX_LENGTH) -> dict:
    return {x: real_roots(scheme, x, max_length).roots for x in range(scheme.size)}


@dataclass
class RootSystemReport:
    r1: list = field(default_factory=list)
    r2: list = field(default_factory=list)
    r3: list = field(default_factory=list)
    r4: list = field(default_factory=list)
    m_table: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not (self.r1 or self.r2 or self.r3 or self.r4)

    def failures(self) -> dict:
        return {k: v for k, v in (("R1", self.r1), ("R2", self.r2),
                                  ("R3", self.r3), ("R4", self.r4)) if v}


def _rank2_count(roots, i: int, j: int) -> int:
    return sum(1 for v in roots
               if all(c >= 0 for c in v)
               and all(c == 0 for k, c in enumerate(v) if k not in (i, j)))


def check_root_system(scheme: CartanScheme, roots: dict) -> RootSystemReport:
    """Test (R1)-(R4) literally for the given per-object root sets.

    ``roots`` maps object positions to sets of vectors.  Witnesses are
    (object position, data) pairs.
    """
    n = scheme.rank
    rep = RootSystemReport()
    for x in range(scheme.size):
        delta = {tuple(v) for v in roots[x]}
        pos = {v for v in delta if all(c >= 0 for c in v)}
        for v in sorted(delta):
            if not (v in pos or negate(v) in pos):
                rep.r1.append((x, v))
        for i in range(n):
            axis = {v for v in delta
                    if all(c == 0 for k, c in enumerate(v) if k != i)}
            want = {unit(i, n), negate(unit(i, n))}
            if axis != want:
                rep.r2.append((x, i))
            image = {scheme.reflection(i, x)(v) for v in delta}
            y = scheme.r(i, x)
            if image != {tuple(v) for v in roots[y]}:
                rep.r3.append((x, i))
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                m = _rank2_count(delta, i, j)
                rep.m_table[(x, i, j)] = m
                y = x
                for _ in range(m):
                    y = scheme.r(i, scheme.r(j, y))
                if y != x:
                    rep.r4.append((x, i, j))
    return rep


def check_coxeter_relations(scheme: CartanScheme, m_table: dict) -> list:
    """Failures of the alternating-product relations; empty when all hold.

    For i == j the relation s_i s_i = id is checked at every object.  Entries
    of ``m_table`` that are None are treated as infinite and skipped.
    """
    n = scheme.rank
    failures = []
    for x in range(scheme.size):
        for i in range(n):
            y = scheme.r(i, x)
            if not (scheme.reflection(i, y) @ scheme.reflection(i, x)).is_identity() \
                    or scheme.r(i, y) != x:
                failures.append((x, i, i))
    for (x, i, j), m in sorted(m_table.items()):
        if i == j or m is None:
            continue
        prod = LatticeMap.identity(n)
        y = x
        for k in range(2 * m):
            g = j if k % 2 == 0 else i
            prod = scheme.reflection(g, y) @ prod
            y = scheme.r(g, y)
        if not prod.is_identity() or y != x:
            failures.append((x, i, j))
    return failures


@dataclass
class FinitenessVerdict:
    finite: bool
    homto: dict = field(default_factory=dict)
    real_roots: dict = field(default_factory=dict)
    root_system: bool | None = None
    consistent: bool | None = None

    @property
    def verdict(self) -> str:
        return "Finite" if self.finite else "UnknownWithinBounds"


def is_finite(scheme: CartanScheme, max_length: int = DEFAULT_MAX_LENGTH) -> FinitenessVerdict:
    """Bounded finiteness decision.

    Never answers "infinite": failure to saturate gives UnknownWithinBounds.
    When finite, also checks that the finiteness conditions agree: each
    connected component has one common #Homto(X), and the real roots form a
    root system whose sets are finite.
    """
    try:
        morphs = _explore(scheme, max_length)
    except LengthBoundExceeded:
        return FinitenessVerdict(False)
    homto = {x: len(morphs[x]) for x in range(scheme.size)}
    roots = all_real_roots(scheme, max_length)
    report = check_root_system(scheme, roots)
    consistent = all(len({homto[x] for x in comp}) == 1 for comp in scheme.components())
    if report.ok:
        # with a root system the positive roots at X are exactly Lambda_+ of the longest element
        for x in range(scheme.size):
            longest = max(morphs[x], key=lambda f: f.length)
            if set(longest.lambda_key) != {v for v in roots[x] if is_positive(v)}:
                consistent = False
    return FinitenessVerdict(True, homto, {x: len(r) for x, r in roots.items()},
                             report.ok, consistent)


def longest_elements(scheme: CartanScheme, x, max_length: int = DEFAULT_MAX_LENGTH) -> list:
    """All morphisms of maximal length into x (a single one for root systems)."""
    try:
        morphs = enumerate_morphisms_to(scheme, x, max_length)
    except LengthBoundExceeded as e:
        raise NotFinite(str(e)) from e
    top = max(f.length for f in morphs)
    return [f for f in morphs if f.length == top]


def admits_root_system(scheme: CartanScheme, max_length: int = DEFAULT_MAX_LENGTH) -> bool:
    return check_root_system(scheme, all_real_roots(scheme, max_length)).ok


def morphism_for_word(scheme: CartanScheme, x, word: Sequence[int],
                      max_length: int = DEFAULT_MAX_LENGTH) -> Morphism:
    """Look up the enumerated morphism equal to the given word at x."""
    x = scheme.index(x)
    _, m, src = walk(scheme, x, word)
    for f in enumerate_morphisms_to(scheme, x, max_length):
        if f.source == src and f.matrix == m:
            return f
    raise KeyError(f"word {tuple(word)} not found")

