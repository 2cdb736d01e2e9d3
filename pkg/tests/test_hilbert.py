from hypothesis import given, strategies as st

from weylgroupoid.hilbert import (
    HilbertSeries,
    factor_height,
    from_factors,
    multiply_truncated,
    series_divides,
)
from weylgroupoid.scalars import parse_scalar


def test_factor_heights():
    assert factor_height(parse_scalar("-1")) == 2
    assert factor_height(parse_scalar("z 1/3")) == 3
    assert factor_height(parse_scalar("z 1/6")) == 6
    assert factor_height(parse_scalar("1")) is None
    assert factor_height(parse_scalar("q^2")) is None


def test_trivial_series():
    h = HilbertSeries(2)
    assert h.truncate(3) == {(0, 0): 1}
    assert h.dimension() == 1


def test_polynomial_ring():
    h = from_factors(2, [((1, 0), None), ((0, 1), None)])
    assert h.by_total_degree(4) == [1, 2, 3, 4, 5]
    assert h.dimension() is None


def test_exterior_algebra():
    h = from_factors(2, [((1, 0), 2), ((0, 1), 2), ((1, 1), 2)])
    assert h.by_total_degree(4) == [1, 2, 2, 2, 1]
    assert h.dimension() == 8
    assert h.truncate(4)[(1, 1)] == 2


def test_factor_order_is_canonical():
    a = from_factors(2, [((0, 1), 3), ((1, 0), None)])
    b = from_factors(2, [((1, 0), None), ((0, 1), 3)])
    assert a == b
    assert a.times(HilbertSeries(2)) == a


def test_divides():
    small = from_factors(1, [((1,), 2)]).truncate(5)
    big = from_factors(1, [((1,), None)]).truncate(5)
    assert series_divides(small, big)
    assert not series_divides(big, small)


factors = st.lists(
    st.tuples(st.sampled_from([(1, 0), (0, 1), (1, 1), (1, 2), (2, 1)]),
              st.sampled_from([None, 2, 3, 4])),
    max_size=4)


@given(factors, factors)
def test_times_matches_truncated_product(f1, f2):
    a, b = from_factors(2, f1), from_factors(2, f2)
    lhs = a.times(b).truncate(6)
    rhs = multiply_truncated(a.truncate(6), b.truncate(6), 6)
    assert lhs == {k: v for k, v in rhs.items() if v}


@given(factors)
def test_dimension_is_coefficient_sum(f):
    h = from_factors(2, f)
    if h.dimension() is not None:
        top = sum(sum(d) * (k - 1) for d, k in h.factors)
        assert sum(h.by_total_degree(top)) == h.dimension()
