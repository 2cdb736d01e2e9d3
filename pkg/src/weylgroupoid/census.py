"""Enumeration of graded right coideal subalgebras through Weyl groupoid morphisms.

Each morphism w into an object X labels one coideal subalgebra E(w) of the
Nichols algebra at X.  Its PBW degrees are the roots beta_l of a reduced
word of w, which as a set equal Lambda_+(w), and its Hilbert series is the
product of rank-one factors over Lambda_+(w).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cartan_types import classify, finite_weyl_order
from .duflo import LambdaSet, is_reduced, leq_duflo
from .errors import (
    LengthBoundExceeded,
    ModeUnsupported,
    NotComparable,
    NotFinite,
    NotReduced,
    NotRootSystem,
    VerificationError,
)
from .groupoid import DEFAULT_MAX_LENGTH, Morphism, admits_root_system, enumerate_morphisms_to
from .hilbert import HilbertSeries, factor_height, from_factors, multiply_truncated
from .lattice import is_positive, unit
from .scheme import CartanScheme
from .words import admissible_betas, walk

DEFAULT_TRUNCATION = 8


@dataclass(frozen=True)
class PBWSequence:
    degrees: tuple
    self_braidings: tuple | None = None


@dataclass(frozen=True)
class CoidealRecord:
    index: int
    morphism: Morphism
    lambda_set: LambdaSet
    pbw: PBWSequence
    hilbert: HilbertSeries | None
    contains_generator: tuple

    @property
    def word(self) -> tuple:
        return self.morphism.word


def _root_system_ok(scheme, max_length) -> bool:
    key = ("root_system", max_length)
    if key not in scheme._cache:
        scheme._cache[key] = admits_root_system(scheme, max_length)
    return scheme._cache[key]


def pbw_degrees(scheme: CartanScheme, x, reduced_word: Sequence[int]) -> PBWSequence:
    """Ordered PBW degrees beta_1, ..., beta_m of a reduced word at x."""
    x = scheme.index(x)
    if not is_reduced(scheme, x, reduced_word):
        raise NotReduced(f"{tuple(reduced_word)} is not reduced at {scheme.objects[x].id}")
    betas, _, _ = walk(scheme, x, reduced_word)
    if not all(is_positive(b) for b in betas) or len(set(betas)) != len(betas):
        raise VerificationError("PBW degrees of a reduced word must be positive and distinct")
    q = scheme.braiding(x)
    selfb = tuple(q.self_braiding(b) for b in betas) if q is not None else None
    return PBWSequence(tuple(betas), selfb)


def is_admissible(scheme: CartanScheme, x, word: Sequence[int],
                  max_length: int = DEFAULT_MAX_LENGTH) -> bool:
    """No beta_l equals -beta_k for k < l.

    For schemes with a root system this must agree with reducedness; a
    disagreement raises VerificationError.
    """
    x = scheme.index(x)
    betas, _, _ = walk(scheme, x, word)
    ok = admissible_betas(betas)
    try:
        has_rs = _root_system_ok(scheme, max_length)
    except LengthBoundExceeded:
        has_rs = False
    if has_rs and ok != is_reduced(scheme, x, word):
        raise VerificationError(f"admissibility and reducedness disagree for {tuple(word)}")
    return ok


def hilbert_series(scheme: CartanScheme, x, lambda_roots: Sequence) -> HilbertSeries:
    """Product of the rank-one factors over the given positive roots at x."""
    x = scheme.index(x)
    q = scheme.braiding(x)
    if q is None:
        raise ModeUnsupported("Hilbert series need a diagonal braiding")
    return from_factors(scheme.rank,
                        [(lam, factor_height(q.self_braiding(lam))) for lam in lambda_roots])


def record_hilbert(scheme: CartanScheme, record: CoidealRecord) -> HilbertSeries:
    if record.hilbert is None:
        raise ModeUnsupported("record carries no braiding data")
    return record.hilbert


def census(scheme: CartanScheme, x, max_length: int = DEFAULT_MAX_LENGTH,
           truncation: int = DEFAULT_TRUNCATION) -> list:
    """One record per morphism into x, ordered by (length, word).

    Asserts that Lambda_+ sets, and truncated Hilbert series when available,
    are pairwise distinct.
    """
    x = scheme.index(x)
    try:
        morphs = enumerate_morphisms_to(scheme, x, max_length)
    except LengthBoundExceeded as e:
        raise NotFinite(str(e)) from e
    if not _root_system_ok(scheme, max_length):
        raise NotRootSystem("the real roots do not form a root system; no census")
    n = scheme.rank
    diagonal = scheme.braiding(x) is not None
    records = []
    for k, f in enumerate(morphs):
        pbw = pbw_degrees(scheme, x, f.word)
        hs = hilbert_series(scheme, x, f.lambda_key) if diagonal else None
        records.append(CoidealRecord(
            k, f, LambdaSet(x, f.lambda_key), pbw, hs,
            tuple(unit(i, n) in f.lambda_key for i in range(n))))
    if len({r.lambda_set.roots for r in records}) != len(records):
        raise VerificationError("two morphisms share a Lambda_+ set")
    if diagonal:
        # large ranks need more than the default degree to tell series apart
        top = max((sum(v) for v in records[-1].lambda_set.roots), default=0)
        deg = max(truncation, top)
        truncs = [tuple(sorted(r.hilbert.truncate(deg).items())) for r in records]
        if len(set(truncs)) != len(truncs):
            raise VerificationError(f"Hilbert series not separated at truncation degree {deg}")
    return records


def inclusion_check(scheme: CartanScheme, x, rec1: CoidealRecord, rec2: CoidealRecord) -> bool:
    """E(w1) is contained in E(w2) iff w1 <=_D w2."""
    return leq_duflo(scheme, x, rec1.morphism, rec2.morphism)


def freeness_check(rec1: CoidealRecord, rec2: CoidealRecord,
                   truncation_degree: int = DEFAULT_TRUNCATION) -> bool:
    """H(E2) = H(E1) * H(complement) on truncations, complement over Lambda(w2) minus Lambda(w1)."""
    if not set(rec1.lambda_set.roots) <= set(rec2.lambda_set.roots):
        raise NotComparable("first record is not contained in the second")
    if rec1.hilbert is None or rec2.hilbert is None:
        raise ModeUnsupported("freeness check needs Hilbert series")
    extra = tuple(f for f in rec2.hilbert.factors if f[0] not in set(rec1.lambda_set.roots))
    comp = HilbertSeries(rec2.hilbert.rank, extra)
    lhs = rec2.hilbert.truncate(truncation_degree)
    rhs = multiply_truncated(rec1.hilbert.truncate(truncation_degree),
                             comp.truncate(truncation_degree), truncation_degree)
    return {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}


def complement_factors(rec1: CoidealRecord, rec2: CoidealRecord) -> tuple:
    keep = set(rec1.lambda_set.roots)
    return tuple(f for f in rec2.hilbert.factors if f[0] not in keep)


@dataclass(frozen=True)
class KharchenkoCount:
    count: int
    standard: bool
    weyl_type: tuple | None = None
    weyl_order: int | None = None

    @property
    def matches_weyl_group(self) -> bool | None:
        if self.weyl_order is None:
            return None
        return self.weyl_order == self.count


def kharchenko_count(scheme: CartanScheme, x, max_length: int = DEFAULT_MAX_LENGTH) -> KharchenkoCount:
    """#Homto(x); for standard schemes also the classical Weyl group order."""
    x = scheme.index(x)
    try:
        count = len(enumerate_morphisms_to(scheme, x, max_length))
    except LengthBoundExceeded as e:
        raise NotFinite(str(e)) from e
    comp = next(c for c in scheme.components() if x in c)
    standard = len({scheme.cartan(y) for y in comp}) == 1
    if not standard:
        return KharchenkoCount(count, False)
    A = scheme.cartan(x)
    types = classify(A)
    order = finite_weyl_order(A)
    if order is not None and order != count:
        raise VerificationError(f"#Homto = {count} but |W({types})| = {order}")
    return KharchenkoCount(count, True, tuple(types) if types else None, order)


@dataclass
class CensusReport:
    """Inclusion structure of a census; ``includes[k]`` lists records inside record k."""

    records: list
    includes: dict = field(default_factory=dict)


def census_report(scheme: CartanScheme, x, max_length: int = DEFAULT_MAX_LENGTH,
                  truncation: int = DEFAULT_TRUNCATION) -> CensusReport:
    recs = census(scheme, x, max_length, truncation)
    inc = {}
    for r2 in recs:
        inc[r2.index] = [r1.index for r1 in recs
                         if r1.index != r2.index and inclusion_check(scheme, x, r1, r2)]
    return CensusReport(recs, inc)
