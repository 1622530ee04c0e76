from fractions import Fraction

import sympy as sp
from hypothesis import given, strategies as st

from hopftwist.arith import ONE, ZERO, RatExpr, parse, register_variables
from hopftwist.linalg import bareiss, det, nullspace, rank, rref, solve

register_variables(["a", "b", "c"])

small = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=1, max_size=5)
)


def R(rows):
    return [[RatExpr(v) if not isinstance(v, str) else parse(v) for v in r] for r in rows]


@given(small)
def test_rank_and_nullspace_match_sympy(rows):
    n = len(rows[0])
    m = R(rows)
    assert rank(m, n) == sp.Matrix(rows).rank()
    ns = nullspace(m, n)
    assert len(ns) == n - sp.Matrix(rows).rank()
    for v in ns:
        for r in m:
            assert sum((x * y for x, y in zip(r, v)), ZERO).is_zero()


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_sympy(rows):
    assert det(R(rows)) == RatExpr(int(sp.Matrix(rows).det()))


def test_symbolic_det_and_bareiss():
    m = R([["a", "b"], ["c", "a"]])
    assert det(m) == parse("a^2 - b*c")
    assert bareiss([[r.as_poly() for r in row] for row in m]) == parse("a^2 - b*c").as_poly()
    m = R([["1/a", "1"], ["b", "a"]])
    assert det(m) == parse("1 - b")
    assert det(R([["1/a", "1"], ["b", "a^2"]])) == parse("a - b")


def test_symbolic_nullspace():
    m = R([["a", "b", "1"], ["1", "0", "c"]])
    ns = nullspace(m, 3)
    assert len(ns) == 1
    for r in m:
        assert sum((x * y for x, y in zip(r, ns[0])), ZERO).is_zero()


def test_rref_is_reduced():
    red, piv = rref(R([[2, 4, 6], [1, 2, 4]]), 3)
    assert piv == [0, 2]
    for r, p in zip(red, piv):
        assert r[p] == ONE


def test_solve():
    a = R([["a", "1"], ["0", "1"]])
    x = solve(a, R([["1"], ["b"]]) and [parse("1"), parse("b")])
    assert x == [parse("(1 - b)/a"), parse("b")]
    assert solve(R([[1, 1], [1, 1]]), [ONE, RatExpr(Fraction(2))]) is None
