from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylgroupoid import scalars as sc
from weylgroupoid.scalars import Scalar, parse_scalar


@pytest.mark.parametrize("text, expected", [
    ("z 1/3", Scalar(Fraction(1, 3), 0)),
    ("q^-2", Scalar(0, -2)),
    ("q", Scalar(0, 1)),
    ("-1", Scalar(Fraction(1, 2), 0)),
    ("1", Scalar()),
    ("-q^2", Scalar(Fraction(1, 2), 2)),
    ("z 1/4 * q^3", Scalar(Fraction(1, 4), 3)),
    ("z 4/3", Scalar(Fraction(1, 3), 0)),
    ("2", Fraction(2)),
    ("-3/5", Fraction(-3, 5)),
])
def test_parse(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["", "x", "2 * q", "z 1/"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_orders():
    assert sc.order(parse_scalar("-1")) == 2
    assert sc.order(parse_scalar("z 2/6")) == 3
    assert sc.order(parse_scalar("q^2")) is None
    assert sc.order(parse_scalar("1")) == 1
    assert sc.order(Fraction(-1)) == 2
    assert sc.order(Fraction(2)) is None


def test_quantum_integers():
    assert sc.quantum_integer_vanishes(parse_scalar("-1"), 2)
    assert not sc.quantum_integer_vanishes(parse_scalar("-1"), 3)
    assert sc.quantum_integer_vanishes(parse_scalar("z 1/3"), 6)
    assert not sc.quantum_integer_vanishes(parse_scalar("q"), 4)
    assert not sc.quantum_integer_vanishes(parse_scalar("1"), 4)


def test_str_round_trip():
    for text in ("z 1/3", "q^-2", "-1", "1", "z 1/4 * q^3", "q"):
        x = parse_scalar(text)
        assert parse_scalar(str(x)) == x


scalars = st.builds(lambda k, n, p: Scalar(Fraction(k, n), p),
                    st.integers(-12, 12), st.integers(1, 12), st.integers(-5, 5))


@given(scalars, scalars, st.integers(-4, 4))
def test_group_laws(x, y, k):
    assert (x * y) / y == x
    assert (x * y) ** k == x ** k * y ** k
    assert (x * x.inverse()).is_one()
    assert 0 <= x.root < 1


@given(scalars)
def test_order_is_exact(x):
    h = x.order()
    if h is None:
        assert x.power != 0
    else:
        assert (x ** h).is_one()
        assert all(not (x ** k).is_one() for k in range(1, h))
