"""Exact scalars for diagonal braidings.

Two kinds of entries are supported:

* :class:`Scalar` -- a monomial ``zeta * q**k`` where ``zeta`` is a root of
  unity (stored as an exponent ``k/n`` in ``[0, 1)``, meaning
  ``exp(2 pi i k/n)``) and ``q`` is a formal parameter that is not a root of
  unity.  Pure roots of unity have ``power == 0``; pure generic powers have
  ``root == 0``.
* :class:`fractions.Fraction` -- exact rationals, used when a generic
  parameter has been specialized (the oracle does this).

All that the combinatorial layer needs is exact equality, multiplication,
multiplicative order and the vanishing of quantum integers, which
:func:`order`, :func:`is_one` and :func:`quantum_integer_vanishes` provide
for both kinds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Union


@dataclass(frozen=True, order=True)
class Scalar:
    root: Fraction = Fraction(0)
    power: int = 0

    def __post_init__(self):
        r = Fraction(self.root)
        object.__setattr__(self, "root", r - (r.numerator // r.denominator))
        object.__setattr__(self, "power", int(self.power))

    @classmethod
    def root_of_unity(cls, k: int, n: int) -> "Scalar":
        return cls(Fraction(k, n), 0)

    @classmethod
    def q_power(cls, k: int) -> "Scalar":
        return cls(Fraction(0), k)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(self.root + other.root, self.power + other.power)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(self.root - other.root, self.power - other.power)

    def __pow__(self, k: int) -> "Scalar":
        return Scalar(self.root * k, self.power * k)

    def inverse(self) -> "Scalar":
        return self ** -1

    def is_one(self) -> bool:
        return self.root == 0 and self.power == 0

    def order(self) -> int | None:
        """Multiplicative order, or None when infinite."""
        if self.power != 0:
            return None
        return self.root.denominator

    def __str__(self) -> str:
        parts = []
        if self.root != 0:
            if self.root == Fraction(1, 2):
                parts.append("-1")
            else:
                parts.append(f"z {self.root.numerator}/{self.root.denominator}")
        if self.power != 0:
            parts.append("q" if self.power == 1 else f"q^{self.power}")
        return " * ".join(parts) if parts else "1"


ONE = Scalar()

ScalarLike = Union[Scalar, Fraction]


def is_one(x: ScalarLike) -> bool:
    if isinstance(x, Scalar):
        return x.is_one()
    return x == 1


def order(x: ScalarLike) -> int | None:
    """Multiplicative order of x (None for infinite order)."""
    if isinstance(x, Scalar):
        return x.order()
    if x == 1:
        return 1
    if x == -1:
        return 2
    return None


def power(x: ScalarLike, k: int) -> ScalarLike:
    if isinstance(x, Scalar):
        return x ** k
    return Fraction(x) ** k


def one_like(x: ScalarLike) -> ScalarLike:
    return ONE if isinstance(x, Scalar) else Fraction(1)


def quantum_integer_vanishes(x: ScalarLike, m: int) -> bool:
    """Whether (m)_x = 1 + x + ... + x^(m-1) is zero (characteristic 0)."""
    h = order(x)
    if h is None or h == 1:
        return False
    return m % h == 0


def mode_of(x: ScalarLike) -> str:
    if isinstance(x, Fraction):
        return "rational"
    return "root_of_unity" if x.power == 0 else "generic_q"


def root_denominator(x: ScalarLike) -> int:
    return x.root.denominator if isinstance(x, Scalar) else 1


def common_root_order(entries) -> int:
    n = 1
    for x in entries:
        n = lcm(n, root_denominator(x))
    return n


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<z>z\s*(?P<zk>-?\d+)\s*/\s*(?P<zn>\d+))
      | (?P<q>q(?:\s*\^\s*(?P<qk>[-+]?\d+))?)
      | (?P<num>[-+]?\d+(?:/\d+)?)
      | (?P<minus>-)
    )\s*\*?""",
    re.VERBOSE,
)


def parse_scalar(text: str | int) -> ScalarLike:
    """Parse a scalar literal.

    Accepted forms (factors may be separated by ``*`` or whitespace):
    ``"z 1/3"`` (primitive cube root ``exp(2 pi i/3)``), ``"q^-2"``, ``"q"``,
    ``"-1"``, ``"1"``, ``"-q^2"``, ``"z 1/4 * q^3"``.  A literal rational
    other than +-1 (e.g. ``"2"``, ``"3/5"``) yields a Fraction.
    """
    if isinstance(text, int):
        text = str(text)
    s = str(text).strip()
    if not s:
        raise ValueError("empty scalar literal")
    root, pw = Fraction(0), 0
    rational = None
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse scalar literal {text!r}")
        pos = m.end()
        if m.group("z"):
            root += Fraction(int(m.group("zk")), int(m.group("zn")))
        elif m.group("q"):
            pw += int(m.group("qk")) if m.group("qk") else 1
        elif m.group("num"):
            val = Fraction(m.group("num"))
            if val == 1:
                continue
            if val == -1:
                root += Fraction(1, 2)
            else:
                rational = val if rational is None else rational * val
        else:
            root += Fraction(1, 2)
    if rational is not None:
        if root != 0 and root != Fraction(1, 2) or pw != 0:
            raise ValueError(f"cannot mix a rational with roots of unity or q: {text!r}")
        return -rational if root == Fraction(1, 2) else rational
    return Scalar(root, pw)
