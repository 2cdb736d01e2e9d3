from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from weylgroupoid.errors import (
    AxiomC1Violation,
    AxiomC2Violation,
    BoundExceeded,
    NotIFinite,
    TooManyObjects,
    UndefinedEntry,
)
from weylgroupoid.scalars import Scalar
from weylgroupoid.scheme import (
    BraidingMatrix,
    build_from_braiding,
    build_from_matrices,
    cartan_row,
    check_axioms,
    diagonal_cartan_entry,
    reflect_braiding,
)

from conftest import THREE_OBJECT_MAPS, THREE_OBJECT_OBJECTS, cartan_braiding

A2Q = BraidingMatrix([["q^2", "q^-1"], ["q^-1", "q^2"]])


def test_cartan_entry_a2_generic():
    assert diagonal_cartan_entry(A2Q, 0, 1) == -1
    assert diagonal_cartan_entry(A2Q, 1, 0) == -1
    assert diagonal_cartan_entry(A2Q, 0, 0) == 2


def test_cartan_entry_decoupled():
    q = BraidingMatrix([["q^2", "q^3"], ["q^-3", "z 1/5"]])
    assert diagonal_cartan_entry(q, 0, 1) == 0
    assert diagonal_cartan_entry(q, 1, 0) == 0


@pytest.mark.parametrize("prod", ["q", "z 1/3", "q^-7", "-1"])
def test_cartan_entry_minus_one_self_braiding(prod):
    q = BraidingMatrix([["-1", prod], ["1", "q^2"]])
    assert diagonal_cartan_entry(q, 0, 1) == -1


def test_cartan_entry_bound():
    q = BraidingMatrix([["q", "q^5"], ["1", "q"]])
    with pytest.raises(BoundExceeded):
        diagonal_cartan_entry(q, 0, 1, bound=8)


def test_cartan_entry_b2_and_g2():
    assert cartan_row(cartan_braiding("B", 2), 1) == (-2, 2)
    assert cartan_row(cartan_braiding("G", 2), 1) == (-3, 2)
    assert cartan_row(cartan_braiding("G", 2), 0) == (2, -1)


def test_rational_mode():
    q = BraidingMatrix([[Fraction(4), Fraction(1, 2)], [Fraction(1, 2), Fraction(4)]])
    assert q.mode == "rational"
    assert diagonal_cartan_entry(q, 0, 1) == -1


def test_modes_cannot_mix():
    with pytest.raises(ValueError):
        BraidingMatrix([["2", "q"], ["1", "2"]])


def test_reflect_keeps_diagonal_entry():
    q = BraidingMatrix([["-1", "q^3"], ["q^-1", "z 1/5"]])
    for i in range(2):
        r = reflect_braiding(q, i, cartan_row(q, i))
        assert r[i, i] == q[i, i]


def test_reflect_a2_keeps_twist_key():
    for i in range(2):
        assert reflect_braiding(A2Q, i, cartan_row(A2Q, i)).twist_key() == A2Q.twist_key()


def test_reflect_changes_object():
    q = BraidingMatrix([["-1", "q^-1"], ["q^-1", "q^2"]])
    r = reflect_braiding(q, 0, cartan_row(q, 0))
    assert r[1, 1] == Scalar(Fraction(1, 2), 0)
    assert r.twist_key() != q.twist_key()


def test_reflect_needs_defined_row():
    with pytest.raises(UndefinedEntry):
        reflect_braiding(A2Q, 0, (2, None))


def test_build_a2_single_object():
    s = build_from_braiding(A2Q)
    assert s.size == 1
    assert s.maps == ((0,), (0,))
    assert s.cartan(0) == ((2, -1), (-1, 2))


def test_build_super_type():
    s = build_from_braiding(BraidingMatrix([["-1", "q"], ["1", "-1"]]))
    assert s.size == 3
    assert {o.cartan for o in s.objects} == {((2, -1), (-1, 2))}
    assert check_axioms(s) == []
    assert s.is_standard()


def test_build_rank_one():
    s = build_from_braiding(BraidingMatrix([["q"]]))
    assert s.size == 1 and s.cartan(0) == ((2,),) and s.maps == ((0,),)


def test_build_not_finite():
    with pytest.raises(NotIFinite):
        build_from_braiding(BraidingMatrix([["q", "q^5"], ["1", "q"]]))


def test_build_too_many_objects():
    with pytest.raises(TooManyObjects):
        build_from_braiding(BraidingMatrix([["-1", "q"], ["1", "-1"]]), max_objects=2)


def test_build_three_object():
    s = build_from_matrices(THREE_OBJECT_OBJECTS, THREE_OBJECT_MAPS)
    assert s.size == 3
    assert check_axioms(s) == []
    assert s.r(0, s.index("X1")) == s.index("X2")
    assert s.r(1, s.index("X3")) == s.index("X2")


def test_single_object_always_valid():
    s = build_from_matrices([("X", [[2, -5, 0], [-1, 2, -2], [0, -7, 2]])], [["X"]] * 3)
    assert check_axioms(s) == []


def test_c2_violation():
    objs = [("X1", [[2, -1], [-3, 2]]), ("X2", [[2, -1], [-3, 2]]), ("X3", [[2, -1], [-4, 2]])]
    with pytest.raises(AxiomC2Violation) as info:
        build_from_matrices(objs, THREE_OBJECT_MAPS)
    assert (info.value.i, info.value.j) == (1, 0)


def test_c1_violation():
    objs = [("X", [[2]]), ("Y", [[2]]), ("Z", [[2]])]
    with pytest.raises(AxiomC1Violation):
        build_from_matrices(objs, [{"X": "Y", "Y": "Z", "Z": "X"}])


def test_check_axioms_reports_c1():
    from weylgroupoid.scheme import CartanScheme, SchemeObject
    objs = tuple(SchemeObject(k, ((2,),)) for k in range(3))
    s = CartanScheme(1, objs, ((1, 2, 0),))
    report = check_axioms(s)
    assert [a for a, _ in report] == ["C1"] * 3


# properties ---------------------------------------------------------------

roots_of_unity = st.builds(lambda k, n: Scalar(Fraction(k, n), 0),
                           st.integers(0, 11), st.sampled_from([1, 2, 3, 4, 5, 6]))


@st.composite
def braidings(draw, max_rank=3):
    n = draw(st.integers(1, max_rank))
    rows = [[draw(roots_of_unity) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        assume(not rows[i][i].is_one())
    return BraidingMatrix(rows)


@given(braidings())
def test_generated_schemes_are_consistent(q):
    try:
        s = build_from_braiding(q, max_objects=60)
    except (NotIFinite, TooManyObjects):
        assume(False)
    assert check_axioms(s) == []
    for x in range(s.size):
        b = s.braiding(x)
        for i in range(s.rank):
            row = cartan_row(b, i)
            assert row == s.cartan(x)[i]
            once = reflect_braiding(b, i, row)
            assert once.twist_key() == s.braiding(s.r(i, x)).twist_key()
            twice = reflect_braiding(once, i, cartan_row(once, i))
            assert twice.twist_key() == b.twist_key()
