"""Factored multivariate Hilbert series and their truncations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import scalars as sc


def factor_height(q_lambda) -> int | None:
    """Nilpotency height of a rank-one Nichols algebra with self-braiding q_lambda.

    None stands for infinity: q_lambda = 1 (polynomial ring in characteristic
    zero) or q_lambda of infinite order.
    """
    h = sc.order(q_lambda)
    if h is None or h == 1:
        return None
    return h


@dataclass(frozen=True)
class HilbertSeries:
    """Product over factors (degree, h) of (1 - t^(h*degree)) / (1 - t^degree).

    ``h is None`` means the factor 1 / (1 - t^degree).
    """

    rank: int
    factors: tuple = ()

    def truncate(self, max_total: int) -> dict:
        """Coefficients {multidegree: int} for all total degrees <= max_total."""
        series = {(0,) * self.rank: 1}
        for deg, h in self.factors:
            step = sum(deg)
            kmax = max_total // step if step else 0
            if h is not None:
                kmax = min(kmax, h - 1)
            new: dict = {}
            for mono, c in series.items():
                tot = sum(mono)
                for k in range(kmax + 1):
                    if tot + k * step > max_total:
                        break
                    key = tuple(a + k * b for a, b in zip(mono, deg))
                    new[key] = new.get(key, 0) + c
            series = new
        return series

    def by_total_degree(self, max_total: int) -> list:
        """Coefficients after specializing every variable to one t."""
        out = [0] * (max_total + 1)
        for mono, c in self.truncate(max_total).items():
            out[sum(mono)] += c
        return out

    def dimension(self) -> int | None:
        """Total dimension, None if infinite."""
        dim = 1
        for _, h in self.factors:
            if h is None:
                return None
            dim *= h
        return dim

    def times(self, other: "HilbertSeries") -> "HilbertSeries":
        return HilbertSeries(self.rank, tuple(sorted(self.factors + other.factors,
                                                     key=_factor_key)))


def _factor_key(f):
    deg, h = f
    return (deg, -1 if h is None else h)


def from_factors(rank: int, factors: Sequence) -> HilbertSeries:
    return HilbertSeries(rank, tuple(sorted(((tuple(d), h) for d, h in factors), key=_factor_key)))


def series_divides(small: dict, big: dict) -> bool:
    """Coefficientwise small <= big on truncated series."""
    return all(c <= big.get(mono, 0) for mono, c in small.items())


def multiply_truncated(a: dict, b: dict, max_total: int) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            if sum(m) <= max_total:
                out[m] = out.get(m, 0) + c1 * c2
    return out
