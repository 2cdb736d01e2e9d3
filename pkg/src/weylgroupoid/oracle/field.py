"""Exact coefficient fields for the oracle: Q and the cyclotomic fields Q(zeta_n).

Elements of Q(zeta_n) are dense coefficient tuples of Fractions reduced
modulo the n-th cyclotomic polynomial.  Fractions and Cyclotomic elements
mix freely in arithmetic, so linear algebra code never needs to know which
field it works over.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm

from .. import scalars as sc

DEFAULT_GENERIC_VALUE = Fraction(2)


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a, b) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_sub(a, b) -> list:
    n = max(len(a), len(b))
    out = [(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)]
    return _trim([Fraction(c) for c in out])


def poly_divmod(a, b) -> tuple:
    a = _trim([Fraction(c) for c in a])
    b = _trim([Fraction(c) for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b):
        c = a[-1] / lead
        shift = len(a) - len(b)
        quot[shift] = c
        for k, y in enumerate(b):
            a[shift + k] -= c * y
        _trim(a)
    return _trim(quot), a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial."""
    p = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            p, rem = poly_divmod(p, cyclotomic_polynomial(d))
            assert not rem
    return tuple(p)


def _poly_inverse_mod(a, m) -> list:
    """Inverse of a modulo m by the extended Euclidean algorithm over Q."""
    r0, r1 = list(m), list(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        quot, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(s0, poly_mul(quot, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    return [c / r0[0] for c in s0]


class Cyclotomic:
    """An element of Q(zeta_n), zeta_n = exp(2 pi i / n)."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs):
        self.n = n
        modulus = cyclotomic_polynomial(n)
        deg = len(modulus) - 1
        coeffs = [Fraction(x) for x in coeffs]
        if len(coeffs) > deg:
            _, coeffs = poly_divmod(coeffs, modulus)
        self.c = tuple(coeffs) + (Fraction(0),) * (deg - len(coeffs))

    @classmethod
    def zeta_power(cls, n: int, k: int) -> "Cyclotomic":
        k %= n
        return cls(n, [0] * k + [1])

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.n != self.n:
                raise ValueError("cannot mix different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.n, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.n, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-a for a in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.n, [a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.n, [a * other for a in self.c])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.n, poly_mul(list(self.c), list(o.c)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta)")
        return Cyclotomic(self.n, _poly_inverse_mod(_trim(list(self.c)),
                                                    list(cyclotomic_polynomial(self.n))))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        out, base = Cyclotomic(self.n, [1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash((self.n, self.c))

    def __repr__(self):
        terms = [f"{a}*z^{k}" if k else f"{a}" for k, a in enumerate(self.c) if a]
        return f"Cyclotomic({self.n}: {' + '.join(terms) or '0'})"


class Embedding:
    """Sends the combinatorial scalars of a braiding into an exact field.

    A monomial ``zeta^a q^k`` goes to ``zeta_N^(a N) * generic_value^k`` where
    N is the common order of all roots of unity involved.  For N <= 2 the
    field is Q itself.
    """

    def __init__(self, entries, generic_value=DEFAULT_GENERIC_VALUE):
        self.generic_value = Fraction(generic_value)
        n = 1
        for e in entries:
            n = lcm(n, sc.root_denominator(e))
        self.n = n

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        k = int(x.root * self.n)
        base = self.generic_value ** x.power
        if self.n <= 2:
            return base * (-1) ** k
        return Cyclotomic.zeta_power(self.n, k) * base

    def one(self):
        return Fraction(1)
