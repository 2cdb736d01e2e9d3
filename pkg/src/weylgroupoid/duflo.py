"""The Lambda_+ calculus and the right Duflo (weak) order."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import LengthBoundExceeded, NotFinite, TargetMismatch, VerificationError
from .groupoid import DEFAULT_MAX_LENGTH, Morphism, admits_root_system, enumerate_morphisms_to
from .lattice import format_root, unit
from .scheme import CartanScheme
from .words import lambda_parity, lambda_recursive, walk


@dataclass(frozen=True)
class LambdaSet:
    base: int
    roots: tuple  # sorted lexicographically

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.roots

    def __le__(self, other: "LambdaSet") -> bool:
        return set(self.roots) <= set(other.roots)


def lambda_plus(scheme: CartanScheme, x, word: Sequence[int]) -> LambdaSet:
    x = scheme.index(x)
    return LambdaSet(x, lambda_parity(scheme, x, word))


def lambda_plus_recursive(scheme: CartanScheme, x, word: Sequence[int]) -> LambdaSet:
    x = scheme.index(x)
    return LambdaSet(x, lambda_recursive(scheme, x, word))


def lambda_sequence(scheme: CartanScheme, x, word: Sequence[int]) -> tuple:
    """The full (signed) root sequence beta_1, ..., beta_m of the word."""
    betas, _, _ = walk(scheme, scheme.index(x), word)
    return tuple(betas)


def is_reduced(scheme: CartanScheme, x, word: Sequence[int]) -> bool:
    return len(lambda_plus(scheme, x, word)) == len(word)


def morphisms_equal(scheme: CartanScheme, x, word1: Sequence[int], word2: Sequence[int]) -> bool:
    x = scheme.index(x)
    same = lambda_parity(scheme, x, word1) == lambda_parity(scheme, x, word2)
    if same:
        _, m1, y1 = walk(scheme, x, word1)
        _, m2, y2 = walk(scheme, x, word2)
        if (m1, y1) != (m2, y2):
            raise VerificationError(
                f"equal Lambda_+ but different morphisms for {tuple(word1)} and {tuple(word2)}")
    return same


def _lambda_of(scheme, x, w) -> tuple:
    if isinstance(w, Morphism):
        if w.target != x:
            raise TargetMismatch(f"morphism has target {w.target}, expected {x}")
        return w.lambda_key
    if isinstance(w, LambdaSet):
        if w.base != x:
            raise TargetMismatch(f"Lambda set based at {w.base}, expected {x}")
        return w.roots
    return lambda_parity(scheme, x, w)


def leq_duflo(scheme: CartanScheme, x, w1, w2) -> bool:
    """w1 <=_D w2, decided by inclusion of Lambda_+ sets.

    w1, w2 may be words, Morphisms or LambdaSets with target x.
    """
    x = scheme.index(x)
    return set(_lambda_of(scheme, x, w1)) <= set(_lambda_of(scheme, x, w2))


@dataclass
class DufloPoset:
    base: int
    nodes: list
    # relation[a] is a bitmask of all b with nodes[a] <= nodes[b]
    relation: list = field(default_factory=list)
    hasse: list = field(default_factory=list)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.relation[a] >> b & 1)

    @property
    def ranks(self) -> list:
        return [f.length for f in self.nodes]


def transitive_reduction(relation: Sequence[int]) -> list:
    """Covering pairs of a partial order given as up-set bitmasks."""
    n = len(relation)
    edges = []
    for a in range(n):
        above = relation[a] & ~(1 << a)
        for b in range(n):
            if not above >> b & 1:
                continue
            between = above & ~(1 << b)
            if not any(between >> c & 1 and relation[c] >> b & 1 for c in range(n)):
                edges.append((a, b))
    return edges


def length_relation(scheme: CartanScheme, nodes: Sequence[Morphism],
                    max_length: int = DEFAULT_MAX_LENGTH) -> list:
    """Up-set bitmasks of w1 <= w2 iff l(w2) = l(w1) + l(w1^-1 w2)."""
    lengths = {}
    for y in {f.source for f in nodes}:
        lengths[y] = {(g.source, g.matrix): g.length
                      for g in enumerate_morphisms_to(scheme, y, max_length)}
    relation = []
    for f1 in nodes:
        # the reversed word read at the source of f1 is f1^-1
        _, inv, _ = walk(scheme, f1.source, tuple(reversed(f1.word)))
        mask = 0
        for b, f2 in enumerate(nodes):
            rest = lengths[f1.source][(f2.source, inv @ f2.matrix)]
            if f1.length + rest == f2.length:
                mask |= 1 << b
        relation.append(mask)
    return relation


def build_poset(scheme: CartanScheme, x, max_length: int = DEFAULT_MAX_LENGTH,
                validate: bool = True) -> DufloPoset:
    """Duflo poset on Homto(x), Hasse edges from generator covers.

    The relation is Lambda_+ inclusion when the real roots form a root
    system, otherwise the length-additive definition.
    """
    x = scheme.index(x)
    try:
        nodes = list(enumerate_morphisms_to(scheme, x, max_length))
    except LengthBoundExceeded as e:
        raise NotFinite(str(e)) from e
    rooted = admits_root_system(scheme, max_length)
    if rooted:
        keys = [frozenset(f.lambda_key) for f in nodes]
        relation = []
        for a in range(len(nodes)):
            mask = 0
            for b in range(len(nodes)):
                if keys[a] <= keys[b]:
                    mask |= 1 << b
            relation.append(mask)
    else:
        # Lambda_+ inclusion needs a root system; fall back to the definition
        relation = length_relation(scheme, nodes, max_length)
    position = {(f.source, f.matrix): k for k, f in enumerate(nodes)}
    hasse = []
    n = scheme.rank
    for a, f in enumerate(nodes):
        # right extensions f s_i one longer than f
        for i in range(n):
            m2 = f.matrix @ scheme.reflection(i, f.source)
            b = position[(scheme.r(i, f.source), m2)]
            up = nodes[b].length == f.length + 1
            if rooted and up != _increases(f, i, n):
                raise VerificationError(f"length of {word_label(f.word)} s{i + 1} "
                                        "disagrees with the sign of f(alpha_i)")
            if up:
                hasse.append((a, b))
    hasse.sort()
    if validate and hasse != sorted(transitive_reduction(relation)):
        raise VerificationError("generator covers differ from the transitive reduction")
    return DufloPoset(x, nodes, relation, hasse)


def _increases(f: Morphism, i: int, n: int) -> bool:
    # l(f s_i) = l(f) + 1 iff f(alpha_i) is positive
    v = f.matrix(unit(i, n))
    return all(c >= 0 for c in v)


def word_label(word: Sequence[int]) -> str:
    return "e" if not word else "".join(f"s{i + 1}" for i in word)


def to_dot(poset: DufloPoset, scheme: CartanScheme | None = None) -> str:
    """Graphviz source for the Hasse diagram (stable node order)."""
    name = poset.base if scheme is None else scheme.objects[poset.base].id
    lines = [f'digraph "duflo_{name}" {{', "  rankdir=BT;"]
    for k, f in enumerate(poset.nodes):
        lines.append(f'  n{k} [label="{word_label(f.word)}\\n|L|={len(f.lambda_key)}"];')
    for a, b in poset.hasse:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def describe_lambda(ls: LambdaSet) -> str:
    return "{" + ", ".join(format_root(v) for v in ls.roots) + "}"
