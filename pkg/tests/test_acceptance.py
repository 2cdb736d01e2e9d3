"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import random
import time
from fractions import Fraction
from itertools import product

import pytest

from weylgroupoid.census import census, kharchenko_count
from weylgroupoid.duflo import (
    build_poset,
    lambda_plus,
    lambda_plus_recursive,
    leq_duflo,
    transitive_reduction,
)
from weylgroupoid.errors import BoundExceeded
from weylgroupoid.groupoid import (
    admits_root_system,
    all_real_roots,
    check_root_system,
    enumerate_morphisms_to,
    morphism_for_word,
    real_roots,
)
from weylgroupoid.io import load_scheme
from weylgroupoid.oracle import (
    adjoint_power_nonzero,
    commutator_check,
    enumerate_coideals_small,
    oracle_cartan_entry,
    symmetrizer_dim,
    verify_coideal,
)
from weylgroupoid.oracle.nichols import multidegrees
from weylgroupoid.scalars import Scalar
from weylgroupoid.scheme import BraidingMatrix, build_from_braiding, build_from_matrices, diagonal_cartan_entry

from conftest import INPUTS, THREE_OBJECT_MAPS, THREE_OBJECT_OBJECTS, cartan_braiding, cartan_scheme
from three_object_roots import real_root_set


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail
    return emit


def test_criterion_1_three_object_roots(report):
    t0 = time.perf_counter()
    s = build_from_matrices(THREE_OBJECT_OBJECTS, THREE_OBJECT_MAPS)
    same = all(real_roots(s, x).roots == real_root_set(x) for x in ("X1", "X2", "X3"))
    rep = check_root_system(s, all_real_roots(s))
    x3 = s.index("X3")
    r1 = (x3, (1, -1)) in rep.r1
    elapsed = time.perf_counter() - t0
    report(1, same and r1 and elapsed < 1.0,
           f"root sets equal: {same}, R1 fails at X3 by a1-a2: {r1}, {elapsed:.3f}s")


@pytest.mark.parametrize("letter, n, size", [
    ("A", 2, 6), ("A", 3, 24), ("B", 2, 8), ("G", 2, 12), ("B", 3, 48),
])
def test_criterion_2_kharchenko_counts(report, letter, n, size):
    t0 = time.perf_counter()
    got = len(census(cartan_scheme(letter, n), 0))
    elapsed = time.perf_counter() - t0
    report(2, got == size and elapsed < 5.0,
           f"{letter}{n}: census size {got}, expected {size}, {elapsed:.2f}s")


def _prefix_order(s, x):
    """w1 <= w2 iff some reduced word of w2 starts with a reduced word of w1, by brute force."""
    nodes = enumerate_morphisms_to(s, x)
    pos = {(f.source, f.matrix): k for k, f in enumerate(nodes)}
    below = {}
    for b, f in enumerate(nodes):
        lows = set()
        for w in product(range(s.rank), repeat=f.length):
            g = morphism_for_word(s, x, w)
            if pos[(g.source, g.matrix)] != b:
                continue
            for p in range(len(w) + 1):
                h = morphism_for_word(s, x, w[:p])
                lows.add(pos[(h.source, h.matrix)])
        below[b] = lows
    return nodes, below


@pytest.mark.parametrize("name, edges", [("A2", 6), ("B2", 8)])
def test_criterion_3_duflo_order(report, name, edges):
    s = cartan_scheme(name[0], int(name[1]))
    nodes, below = _prefix_order(s, 0)
    agree = all(leq_duflo(s, 0, nodes[a], nodes[b]) == (a in below[b])
                for a in range(len(nodes)) for b in range(len(nodes)))
    poset = build_poset(s, 0)
    brute = [sum(1 << b for b in range(len(nodes)) if a in below[b]) for a in range(len(nodes))]
    hasse_ok = poset.hasse == sorted(transitive_reduction(brute)) and len(poset.hasse) == edges
    report(3, agree and hasse_ok,
           f"{name}: {len(nodes)} nodes, {len(poset.hasse)} edges, pairwise agreement {agree}")


def test_criterion_4_hilbert_agreement(report):
    q = cartan_braiding("A", 2)
    full = census(cartan_scheme("A", 2), 0)[-1]
    predicted = full.hilbert.by_total_degree(6)
    t0 = time.perf_counter()
    dims = {}
    for gv in (Fraction(2), Fraction(3)):
        dims[gv] = [sum(symmetrizer_dim(q, d, 6, gv) for d in multidegrees(2, t))
                    for t in range(7)]
    elapsed = time.perf_counter() - t0
    ok = (dims[2] == dims[3] == predicted == [1, 2, 4, 6, 9, 12, 16]) and elapsed < 30
    report(4, ok, f"q=2: {dims[2]}, q=3: {dims[3]}, formula: {predicted}, {elapsed:.2f}s")


def test_criterion_5_coideal_closure(report):
    q = cartan_braiding("A", 2)
    records = census(cartan_scheme("A", 2), 0)
    results = []
    for r in records:
        try:
            verify_coideal(q, r, cap=5)
            results.append(True)
        except Exception as e:  # report every record, then fail
            results.append(e)
    ok = len(records) == 6 and all(x is True for x in results)
    report(5, ok, f"{sum(x is True for x in results)}/{len(records)} A2 records pass to degree 5")


BOUND = 4


def _random_scalar(rng, mode):
    if mode == "root_of_unity":
        n = rng.randint(1, 6)
        return Scalar(Fraction(rng.randrange(n), n), 0)
    if mode == "generic_q":
        n = rng.choice([1, 2, 3, 4])
        return Scalar(Fraction(rng.randrange(n), n), rng.randint(-3, 3))
    return rng.choice([Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(3), Fraction(-1, 3)])


def _random_braiding(rng, mode):
    diag = [_random_scalar(rng, mode) for _ in range(2)]
    rows = [[diag[0], None], [None, diag[1]]]
    # half the time force a small vanishing exponent so entries are not all out of bound
    if rng.random() < 0.5:
        m = rng.randint(0, BOUND)
        i = rng.randrange(2)
        prod = diag[i] ** -m
    else:
        prod = _random_scalar(rng, mode)
    rows[0][1] = prod
    rows[1][0] = Fraction(1) if isinstance(prod, Fraction) else Scalar(Fraction(0), 0)
    return BraidingMatrix(rows)


@pytest.mark.parametrize("mode", ["root_of_unity", "generic_q", "rational"])
def test_criterion_6_cartan_entry_oracle(report, mode):
    rng = random.Random(f"cartan-{mode}")
    agree = total = in_bound = 0
    for _ in range(30):
        q = _random_braiding(rng, mode)
        for i, j in ((0, 1), (1, 0)):
            try:
                formula = diagonal_cartan_entry(q, i, j, BOUND)
            except BoundExceeded:
                formula = None
            # -(first m with (ad x_i)^m (x_j) = 0) + 1
            oracle = oracle_cartan_entry(q, i, j, BOUND)
            total += 1
            in_bound += formula is not None
            agree += formula == oracle
    report(6, total >= 40 and agree == total,
           f"{mode}: {agree}/{total} entries agree, {in_bound} within bound {BOUND}")


def test_criterion_6_adjoint_definition():
    # oracle_cartan_entry is the first vanishing adjoint power
    q = cartan_braiding("G", 2)
    assert [adjoint_power_nonzero(q, 1, 0, m) for m in range(5)] == [True] * 4 + [False]
    assert oracle_cartan_entry(q, 1, 0) == -3


@pytest.mark.parametrize("name, cap", [("A2", 6), ("B2", 6)])
def test_criterion_7_commutators(report, name, cap):
    q = cartan_braiding(name[0], int(name[1]))
    full = census(cartan_scheme(name[0], int(name[1])), 0)[-1]
    try:
        rep = commutator_check(q, full, cap=cap)
        ok, detail = True, f"{rep.checked} commutator and coproduct checks"
    except Exception as e:  # report, then fail
        ok, detail = False, str(e)
    report(7, ok, f"{name} to degree {cap}: {detail}")


CORPUS = ["a2.json", "b2.json", "g2.json", "a2_minus_one.json", "super_a2.toml",
          "three_objects.json", "affine_a1.json"]


@pytest.mark.parametrize("name", CORPUS)
def test_criterion_8_lambda_calculus(report, name):
    s = load_scheme(INPUTS / name)
    finite = name != "affine_a1.json"
    # the Lambda_+ statements presuppose real roots that are all positive or
    # negative; the affine input has no finite check but its roots are of that kind
    rooted = admits_root_system(s) if finite else True
    rng = random.Random(f"lambda-{name}")
    bad = []
    for _ in range(1000):
        x = rng.randrange(s.size)
        w = tuple(rng.randrange(s.rank) for _ in range(rng.randrange(13)))
        lam = lambda_plus(s, x, w)
        if rooted and lam != lambda_plus_recursive(s, x, w):
            bad.append(("recursion", x, w))
        if not finite:
            continue
        i = rng.randrange(s.rank)
        # s_i in front of w read at r_i(x)
        g = morphism_for_word(s, s.r(i, x), w)
        h = morphism_for_word(s, x, (i,) + w)
        if abs(h.length - g.length) != 1:
            bad.append(("length step", x, (i,) + w))
        if not rooted:
            continue
        if morphism_for_word(s, x, w).length != len(lam):
            bad.append(("length", x, w))
        e = tuple(int(k == i) for k in range(s.rank))
        if (h.length > g.length) != (e not in g.lambda_key):
            bad.append(("left multiplication", x, (i,) + w))
    checks = (["parity=recursion"] if rooted else []) + (["length steps"] if finite else []) + \
        (["|L+| = length", "a_i in L+ test"] if rooted and finite else [])
    report(8, not bad, f"{name}: 1000 words, {', '.join(checks)}, {len(bad)} failures")


@pytest.mark.parametrize("q", [
    [["-1"]],
    [["z 1/3"]],
    [["z 1/4"]],
    [["-1", "1"], ["1", "-1"]],
    [["-1", "-1"], ["1", "-1"]],
    [["-1", "z 1/3"], ["1", "-1"]],
])
def test_criterion_9_brute_force_census(report, q):
    b = BraidingMatrix(q)
    res = enumerate_coideals_small(b)
    homto = kharchenko_count(build_from_braiding(b), 0).count
    report(9, res.exhaustive and res.count == homto,
           f"q={q}: {res.count} coideal subalgebras, #Homto = {homto}")
