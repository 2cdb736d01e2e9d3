"""Finite-type Cartan matrices, their Weyl group orders and Cartan-type braidings."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .lattice import validate_gcm
from .scalars import Scalar

_EXCEPTIONAL_ORDERS = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                       ("F", 4): 1152, ("G", 2): 12}


def cartan_matrix(letter: str, n: int) -> tuple:
    """Cartan matrix of a finite type, Bourbaki numbering.

    The convention is a_ij = 2 (a_i, a_j) / (a_i, a_i); for B_n the last
    simple root is short, for C_n it is long.
    """
    letter = letter.upper()
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        A[i][j], A[j][i] = aij, aji

    if letter == "A" and n >= 1:
        for i in range(n - 1):
            bond(i, i + 1)
    elif letter in "BC" and n >= 2:
        for i in range(n - 2):
            bond(i, i + 1)
        if letter == "B":
            bond(n - 2, n - 1, -1, -2)
        else:
            bond(n - 2, n - 1, -2, -1)
    elif letter == "D" and n >= 4:
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif letter == "E" and n in (6, 7, 8):
        bond(0, 2)
        bond(1, 3)
        bond(2, 3)
        for i in range(3, n - 1):
            bond(i, i + 1)
    elif letter == "F" and n == 4:
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif letter == "G" and n == 2:
        bond(0, 1, -1, -3)
    else:
        raise ValueError(f"no finite Cartan type {letter}{n}")
    return validate_gcm(A)


def weyl_group_order(letter: str, n: int) -> int:
    letter = letter.upper()
    if letter == "A":
        return factorial(n + 1)
    if letter in "BC":
        return 2 ** n * factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * factorial(n)
    return _EXCEPTIONAL_ORDERS[(letter, n)]


def _components(A) -> list:
    n = len(A)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, todo = [], [s]
        seen.add(s)
        while todo:
            i = todo.pop()
            comp.append(i)
            for j in range(n):
                if A[i][j] != 0 and j not in seen:
                    seen.add(j)
                    todo.append(j)
        comps.append(sorted(comp))
    return comps


def _classify_connected(A, idx) -> tuple | None:
    n = len(idx)
    if n == 1:
        return ("A", 1)
    edges = {}
    deg = {i: 0 for i in idx}
    for a in idx:
        for b in idx:
            if a < b and A[a][b] != 0:
                edges[(a, b)] = A[a][b] * A[b][a]
                deg[a] += 1
                deg[b] += 1
    if len(edges) != n - 1 or any(v > 3 for v in edges.values()):
        return None  # cycle, or affine / indefinite bond
    heavy = [e for e, v in edges.items() if v > 1]
    branch = [i for i in idx if deg[i] >= 3]
    if len(branch) > 1 or any(deg[i] > 3 for i in idx):
        return None
    if not heavy and not branch:
        return ("A", n)
    if heavy and branch:
        return None
    if heavy:
        if len(heavy) > 1:
            return None
        (a, b), = heavy
        if edges[(a, b)] == 3:
            return ("G", 2) if n == 2 else None
        # double bond: at an end gives B/C, in the middle of a 4-chain gives F4
        if deg[a] == 1 or deg[b] == 1:
            return ("B", n)  # B_n and C_n share the Weyl group
        return ("F", 4) if n == 4 else None
    # simply laced with one branch point: D or E by arm lengths
    c = branch[0]
    arms = []
    for start in (j for j in idx if j != c and A[c][j] != 0):
        length, prev, cur = 1, c, start
        while True:
            nxt = [j for j in idx if j not in (prev, cur) and A[cur][j] != 0]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", n)
    return None


def classify(A) -> list | None:
    """Finite-type components [(letter, rank), ...], or None if not of finite type."""
    A = validate_gcm(A)
    out = []
    for comp in _components(A):
        t = _classify_connected(A, comp)
        if t is None:
            return None
        out.append(t)
    return sorted(out)


def finite_weyl_order(A) -> int | None:
    types = classify(A)
    if types is None:
        return None
    order = 1
    for letter, n in types:
        order *= weyl_group_order(letter, n)
    return order


def symmetrizer(A) -> list:
    """Positive integers d with d_i a_ij = d_j a_ji (smallest per component)."""
    A = validate_gcm(A)
    n = len(A)
    d = [None] * n
    for comp in _components(A):
        d[comp[0]] = Fraction(1)
        todo = [comp[0]]
        while todo:
            i = todo.pop()
            for j in comp:
                if A[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * A[i][j] / A[j][i]
                    todo.append(j)
        for i in comp:
            for j in comp:
                if d[i] * A[i][j] != d[j] * A[j][i]:
                    raise ValueError("Cartan matrix is not symmetrizable")
        den = 1
        for i in comp:
            den = den * d[i].denominator // _gcd(den, d[i].denominator)
        for i in comp:
            d[i] = d[i] * den
    return [int(x) for x in d]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def cartan_type_braiding(A) -> list:
    """Symmetric generic braiding q_ij = q^(d_i a_ij) realizing the Cartan matrix A."""
    d = symmetrizer(A)
    n = len(d)
    return [[Scalar.q_power(d[i] * A[i][j]) for j in range(n)] for i in range(n)]
