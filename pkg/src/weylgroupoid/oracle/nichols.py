"""Brute-force Nichols algebras of diagonal type inside the quantum shuffle algebra.

Everything here is exact linear algebra on word vectors.  Generic q is
specialized to a rational that is not a root of unity (2 by default); every
zero test made below is a statement about Laurent monomials zeta * q^e being
one or a quantum integer vanishing, and at q = 2 these hold exactly when
they hold for the indeterminate.  A second value (3) is offered as a guard.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .. import scalars as sc
from ..errors import CheckFailed, DegreeCapExceeded, DimCapExceeded, NotFiniteDimensional
from ..lattice import add, sub, total_degree, unit
from ..scheme import DEFAULT_EXPONENT_BOUND, BraidingMatrix
from .field import DEFAULT_GENERIC_VALUE
from .linalg import Subspace, axpy, combine, nullspace, rank
from .shuffle import ShuffleAlgebra

DEFAULT_CAP = 8
GUARD_GENERIC_VALUE = Fraction(3)
DEFAULT_DIM_CAP = 64


def multidegrees(rank: int, total: int):
    """All d in N_0^rank with |d| = total, lexicographically descending."""
    if rank == 1:
        yield (total,)
        return
    for a in range(total, -1, -1):
        for rest in multidegrees(rank - 1, total - a):
            yield (a,) + rest


def words_of_degree(d: Sequence[int]) -> list:
    out = []

    def grow(prefix, left):
        if not any(left):
            out.append(tuple(prefix))
            return
        for i, k in enumerate(left):
            if k:
                left[i] -= 1
                prefix.append(i)
                grow(prefix, left)
                prefix.pop()
                left[i] += 1

    grow([], list(d))
    return out


def _check_cap(d, cap: int):
    if total_degree(d) > cap:
        raise DegreeCapExceeded(f"total degree {total_degree(d)} exceeds cap {cap}")


def _as_braiding(q) -> BraidingMatrix:
    return q if isinstance(q, BraidingMatrix) else BraidingMatrix(q)


class NicholsAlgebra:
    """Graded components B_d = sum_j B_(d - alpha_j) * x_j, computed lazily."""

    def __init__(self, q, cap: int = DEFAULT_CAP, generic_value=DEFAULT_GENERIC_VALUE):
        self.braiding = _as_braiding(q)
        self.rank = self.braiding.rank
        self.cap = cap
        self.alg = ShuffleAlgebra(self.braiding, generic_value)
        self._components = {(0,) * self.rank: Subspace([self.alg.one()])}

    def component(self, d: Sequence[int]) -> Subspace:
        d = tuple(d)
        sub_ = self._components.get(d)
        if sub_ is not None:
            return sub_
        if any(c < 0 for c in d):
            return Subspace()
        _check_cap(d, self.cap)
        space = Subspace()
        for j in range(self.rank):
            if d[j]:
                for b in self.component(sub(d, unit(j, self.rank))).basis:
                    space.add(self.alg.times_letter(b, j))
        self._components[d] = space
        return space

    def basis(self, d) -> list:
        return self.component(d).basis

    def dim(self, d) -> int:
        return self.component(d).dim

    def hilbert(self, max_total: int) -> dict:
        return {d: self.dim(d) for t in range(max_total + 1) for d in multidegrees(self.rank, t)}

    def by_total_degree(self, max_total: int) -> list:
        return [sum(self.dim(d) for d in multidegrees(self.rank, t)) for t in range(max_total + 1)]

    def derivation_images(self, d, j: int) -> list:
        """The left derivation d_j applied to the basis of B_d."""
        return [self.alg.left_derivation(b, j) for b in self.basis(d)]

    def check_derivations(self, max_total: int) -> None:
        """Derivations map B_d into B_(d - alpha_j), with zero joint kernel in degree > 0."""
        n = self.rank
        for t in range(1, max_total + 1):
            for d in multidegrees(n, t):
                basis = self.basis(d)
                if not basis:
                    continue
                stacked = [dict() for _ in basis]
                for j in range(n):
                    if not d[j]:
                        continue
                    target = self.component(sub(d, unit(j, n)))
                    for k, img in enumerate(self.derivation_images(d, j)):
                        if not target.contains(img):
                            raise CheckFailed("derivation closure", d, f"d_{j + 1} leaves B")
                        for w, c in img.items():
                            stacked[k][(j, w)] = c
                if nullspace(stacked):
                    raise CheckFailed("derivation kernel", d, "joint kernel is nonzero")


def symmetrizer_dim(q, d: Sequence[int], cap: int = DEFAULT_CAP,
                    generic_value=DEFAULT_GENERIC_VALUE) -> int:
    """Rank of the quantum symmetrizer on the words of multidegree d."""
    _check_cap(d, cap)
    alg = ShuffleAlgebra(_as_braiding(q), generic_value)
    return rank(alg.symmetrized(w) for w in words_of_degree(d))


def _symmetrizer_dim_job(args):
    return symmetrizer_dim(*args)


def symmetrizer_dims(q, max_total: int, cap: int = DEFAULT_CAP,
                     generic_value=DEFAULT_GENERIC_VALUE, threads: int = 1) -> dict:
    """symmetrizer_dim at every multidegree of total degree <= max_total."""
    q = _as_braiding(q)
    degs = [d for t in range(max_total + 1) for d in multidegrees(q.rank, t)]
    jobs = [(q, d, cap, generic_value) for d in degs]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            dims = list(pool.map(_symmetrizer_dim_job, jobs))
    else:
        dims = [_symmetrizer_dim_job(j) for j in jobs]
    return dict(zip(degs, dims))


def dims_by_total_degree(dims: dict, max_total: int) -> list:
    out = [0] * (max_total + 1)
    for d, k in dims.items():
        if sum(d) <= max_total:
            out[sum(d)] += k
    return out


def adjoint_power(alg: ShuffleAlgebra, i: int, j: int, m: int) -> dict:
    n = alg.rank
    y, deg = alg.letter(j), unit(j, n)
    for _ in range(m):
        y = alg.adjoint(i, y, deg)
        deg = add(deg, unit(i, n))
    return y


def adjoint_power_nonzero(q, i: int, j: int, m: int, cap: int = DEFAULT_CAP,
                          generic_value=DEFAULT_GENERIC_VALUE) -> bool:
    """Whether (ad x_i)^m (x_j) is nonzero."""
    if i == j:
        raise ValueError("adjoint powers need i != j")
    if m + 1 > cap:
        raise DegreeCapExceeded(f"(ad x_i)^{m}(x_j) has degree {m + 1} > cap {cap}")
    alg = ShuffleAlgebra(_as_braiding(q), generic_value)
    return bool(adjoint_power(alg, i, j, m))


def oracle_cartan_entry(q, i: int, j: int, bound: int = DEFAULT_EXPONENT_BOUND,
                        generic_value=DEFAULT_GENERIC_VALUE) -> int | None:
    """-max{m : (ad x_i)^m (x_j) != 0}, or None when that maximum exceeds bound."""
    if i == j:
        return 2
    alg = ShuffleAlgebra(_as_braiding(q), generic_value)
    n = alg.rank
    y, deg = alg.letter(j), unit(j, n)
    for m in range(1, bound + 2):
        y = alg.adjoint(i, y, deg)
        deg = add(deg, unit(i, n))
        if not y:
            return -(m - 1)
    return None


# root vectors and PBW spans -------------------------------------------------


def _span_get(span: dict, d) -> Subspace:
    return span.get(tuple(d)) or Subspace()


class PBWBuilder:
    """Root vectors and the spans E_0 ⊂ E_1 ⊂ ... ⊂ E_m along a PBW sequence.

    E_l is spanned by the ordered monomials E_(beta_l)^(a_l) ... E_(beta_1)^(a_1)
    with a_k below the height of beta_k.  The root vector of beta_l is the
    element of B_(beta_l), unique up to a scalar, all of whose right strips
    lie in E_(l-1); uniqueness is checked.  Roots above the cap are skipped.
    """

    def __init__(self, nichols: NicholsAlgebra, betas: Sequence, heights: Sequence):
        self.B = nichols
        self.alg = nichols.alg
        self.betas = [tuple(b) for b in betas]
        self.heights = list(heights)
        self.cap = nichols.cap
        self.root_vectors: list = []
        zero = (0,) * nichols.rank
        self.spans = [{zero: Subspace([self.alg.one()])}]
        for l, beta in enumerate(self.betas):
            if total_degree(beta) > self.cap:
                self.root_vectors.append(None)
                self.spans.append(self.spans[-1])
                continue
            e = self._root_vector(l, beta)
            self.root_vectors.append(e)
            self.spans.append(self._extend(self.spans[-1], e, beta, self.heights[l]))

    def _root_vector(self, l: int, beta) -> dict:
        n = self.B.rank
        prev = self.spans[-1]
        basis = self.B.basis(beta)
        cols = []
        for b in basis:
            col = {}
            for j in range(n):
                if beta[j]:
                    res = _span_get(prev, sub(beta, unit(j, n))).reduce(self.alg.right_strip(b, j))
                    for w, c in res.items():
                        col[(j, w)] = c
            cols.append(col)
        sols = nullspace(cols)
        if len(sols) != 1:
            raise CheckFailed("root vector", beta,
                              f"{len(sols)} independent candidates for root {l + 1}")
        return combine(sols[0], basis)

    def _extend(self, span: dict, e: dict, beta, height) -> dict:
        new = {d: s.copy() for d, s in span.items()}
        power, a = self.alg.one(), 0
        while True:
            a += 1
            if height is not None and a >= height:
                break
            deg_a = tuple(a * c for c in beta)
            if total_degree(deg_a) > self.cap:
                break
            power = self.alg.mul(e, power)
            for d, s in span.items():
                target = add(deg_a, d)
                if total_degree(target) > self.cap:
                    continue
                dest = new.setdefault(target, Subspace())
                for v in s.basis:
                    dest.add(self.alg.mul(power, v))
        return new

    @property
    def span(self) -> dict:
        return self.spans[-1]

    def monomial_span(self, lo: int, hi: int, target) -> Subspace:
        """Span of ordered monomials in root vectors lo < k < hi (0-based) of degree target."""
        idx = [k for k in range(lo + 1, hi) if self.root_vectors[k] is not None]
        out = Subspace()
        ranges = []
        for k in idx:
            b, h = self.betas[k], self.heights[k]
            top = min(target[c] // b[c] for c in range(len(b)) if b[c])
            if h is not None:
                top = min(top, h - 1)
            ranges.append(range(top + 1))
        for exps in product(*ranges):
            deg = (0,) * len(target)
            for k, a in zip(idx, exps):
                deg = add(deg, tuple(a * c for c in self.betas[k]))
            if deg != tuple(target):
                continue
            mono = self.alg.one()
            for k, a in zip(idx, exps):  # later roots end up on the left
                for _ in range(a):
                    mono = self.alg.mul(self.root_vectors[k], mono)
            out.add(mono)
        return out


@dataclass
class OracleReport:
    name: str
    cap: int
    checked: int = 0
    dims: dict = field(default_factory=dict)


def _heights(q: BraidingMatrix, betas) -> list:
    out = []
    for b in betas:
        h = sc.order(q.self_braiding(b))
        out.append(None if h is None or h == 1 else h)
    return out


def verify_coideal(q, record, cap: int = DEFAULT_CAP,
                   generic_value=DEFAULT_GENERIC_VALUE) -> OracleReport:
    """Realize E(w) for a census record and check it is a right coideal subalgebra.

    Checks (a) closure under right multiplication by root vectors, hence under
    multiplication, (b) closure under every right strip (id (x) f_j) Delta, and
    (c) graded dimensions equal to the record's truncated Hilbert series, all
    in total degree <= cap.  Raises CheckFailed on the first failure.
    """
    q = _as_braiding(q)
    B = NicholsAlgebra(q, cap, generic_value)
    betas = record.pbw.degrees
    pbw = PBWBuilder(B, betas, _heights(q, betas))
    span = pbw.span
    n = q.rank
    rep = OracleReport("coideal", cap)
    for k, e in enumerate(pbw.root_vectors):
        if e is None:
            continue
        for d, s in span.items():
            target = add(d, betas[k])
            if total_degree(target) > cap:
                continue
            dest = _span_get(span, target)
            for v in s.basis:
                rep.checked += 1
                if not dest.contains(pbw.alg.mul(v, e)):
                    raise CheckFailed("multiplication", target)
    for d, s in span.items():
        for j in range(n):
            if not d[j]:
                continue
            dest = _span_get(span, sub(d, unit(j, n)))
            for v in s.basis:
                rep.checked += 1
                if not dest.contains(pbw.alg.right_strip(v, j)):
                    raise CheckFailed("right coideal", d, f"strip by letter {j + 1}")
    expected = record.hilbert.truncate(cap)
    for t in range(cap + 1):
        for d in multidegrees(n, t):
            got = _span_get(span, d).dim
            rep.dims[d] = got
            if got != expected.get(d, 0):
                raise CheckFailed("graded dimension", d,
                                  f"span has {got}, series predicts {expected.get(d, 0)}")
    return rep


def commutator_check(q, record, cap: int = DEFAULT_CAP,
                     generic_value=DEFAULT_GENERIC_VALUE) -> OracleReport:
    """PBW commutation rules and coproduct triangularity of the root vectors.

    For k < l with |beta_k + beta_l| <= cap, E_k E_l - chi(beta_k, beta_l) E_l E_k
    must lie in the span of ordered monomials in the roots strictly between.
    For every root vector x and nonempty word s, the component of Delta(x)
    with right factor dual to s must lie in the span of the earlier roots.
    """
    q = _as_braiding(q)
    B = NicholsAlgebra(q, cap, generic_value)
    betas = record.pbw.degrees
    pbw = PBWBuilder(B, betas, _heights(q, betas))
    alg = pbw.alg
    rep = OracleReport("commutator", cap)
    roots = pbw.root_vectors
    for k in range(len(betas)):
        for l in range(k + 1, len(betas)):
            if roots[k] is None or roots[l] is None:
                continue
            target = add(betas[k], betas[l])
            if total_degree(target) > cap:
                continue
            chi = alg.chi(betas[k], betas[l])
            bracket = axpy(alg.mul(roots[k], roots[l]), -chi, alg.mul(roots[l], roots[k]))
            rep.checked += 1
            if not pbw.monomial_span(k, l, target).contains(bracket):
                raise CheckFailed("commutator", target, f"roots {k + 1} and {l + 1}")
    for l, x in enumerate(roots):
        if x is None:
            continue
        lower = pbw.spans[l]
        suffixes = {w[p:] for w in x for p in range(len(w))}
        for s in sorted(suffixes):
            part = alg.right_suffix_component(x, s)
            deg = sub(betas[l], _deg(s, q.rank))
            rep.checked += 1
            if not _span_get(lower, deg).contains(part):
                raise CheckFailed("coproduct", betas[l], f"right factor {s}")
    return rep


def _deg(word, n):
    d = [0] * n
    for i in word:
        d[i] += 1
    return tuple(d)


# exhaustive search in finite-dimensional algebras ---------------------------


@dataclass
class CoidealCount:
    count: int
    exhaustive: bool
    dimension_vectors: list


def _finite_components(B: NicholsAlgebra, dim_cap: int) -> list:
    n = B.rank
    degs, total, t = [], 1, 0
    while True:
        t += 1
        level = [d for d in multidegrees(n, t) if B.dim(d)]
        if not level:
            return degs
        total += sum(B.dim(d) for d in level)
        if total > dim_cap:
            raise DimCapExceeded(f"dimension exceeds {dim_cap}")
        degs.extend(sorted(level))


def enumerate_coideals_small(q, dim_cap: int = DEFAULT_DIM_CAP,
                             generic_value=DEFAULT_GENERIC_VALUE) -> CoidealCount:
    """Count graded right coideal subalgebras of a finite-dimensional B(V).

    Degree by degree, E_d must contain the products E_a E_b (a + b = d) and
    lie in {x in B_d : every right strip of x lies in E}.  Every subspace in
    between extends, so the search branches over them; when the gap is at
    least two-dimensional only subspaces spanned by subsets of a fixed basis
    of the gap are tried and the result is flagged non-exhaustive.
    """
    q = _as_braiding(q)
    n = q.rank
    for i in range(n):
        h = sc.order(q[i, i])
        if h is None or h == 1:
            raise NotFiniteDimensional(f"x_{i + 1} is not nilpotent")
    B = NicholsAlgebra(q, dim_cap, generic_value)
    degs = _finite_components(B, dim_cap)
    alg = B.alg
    zero = (0,) * n
    found = set()
    exhaustive = True

    def search(pos: int, E: dict):
        nonlocal exhaustive
        if pos == len(degs):
            found.add(tuple(E[d].dim for d in degs))
            return
        d = degs[pos]
        lower = Subspace()
        for a, sa in E.items():
            if a == zero or not sa.dim:
                continue
            b = sub(d, a)
            if b == zero or any(c < 0 for c in b) or b not in E:
                continue
            for u in sa.basis:
                for v in E[b].basis:
                    lower.add(alg.mul(u, v))
        basis = B.basis(d)
        cols = []
        for x in basis:
            col = {}
            for j in range(n):
                if d[j]:
                    res = _span_get(E, sub(d, unit(j, n))).reduce(alg.right_strip(x, j))
                    for w, c in res.items():
                        col[(j, w)] = c
            cols.append(col)
        upper = [combine(s, basis) for s in nullspace(cols)]
        gap = []
        probe = lower.copy()
        for u in upper:
            if probe.add(u):
                gap.append(u)
        if len(gap) >= 2:
            exhaustive = False
        for choice in product((False, True), repeat=len(gap)):
            space = lower.copy()
            for u, take in zip(gap, choice):
                if take:
                    space.add(u)
            E2 = dict(E)
            E2[d] = space
            search(pos + 1, E2)

    search(0, {zero: Subspace([alg.one()])})
    vectors = sorted(found)
    return CoidealCount(len(vectors), exhaustive, vectors)
