from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from hopftwist import _kernels_py as pyk
from hopftwist import kernels

try:
    from hopftwist import _kernels as cyk
except ImportError:  # extension not built
    cyk = None

needs_ext = pytest.mark.skipif(cyk is None, reason="compiled extension not built")


@st.composite
def monomials(draw, nvars=6, maxexp=4):
    ids = sorted(draw(st.sets(st.integers(0, nvars - 1), max_size=nvars)))
    out = []
    for i in ids:
        out += [i, draw(st.integers(1, maxexp))]
    return tuple(out)


polys = st.dictionaries(monomials(), st.integers(-20, 20).filter(bool), max_size=6)
int_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=0, max_size=6).map(
        lambda rows: (rows, n)
    )
)


def as_dict(m):
    return {m[k]: m[k + 1] for k in range(0, len(m), 2)}


def test_selector_exports_backend():
    assert kernels.BACKEND in ("cython", "python")


@given(monomials(), monomials())
def test_mono_mul_adds_exponents(a, b):
    got = as_dict(pyk.mono_mul(a, b))
    want = dict(as_dict(a))
    for v, e in as_dict(b).items():
        want[v] = want.get(v, 0) + e
    assert got == want
    assert list(got) == sorted(got)


@given(monomials(), monomials())
def test_mono_div_inverts_mul(a, b):
    assert pyk.mono_div(pyk.mono_mul(a, b), b) == a
    q = pyk.mono_div(a, b)
    if q is not None:
        assert pyk.mono_mul(q, b) == a


@given(polys, polys, polys)
def test_poly_mul_distributes(p, q, r):
    s = dict(q)
    for m, c in r.items():
        s[m] = s.get(m, 0) + c
    s = {m: c for m, c in s.items() if c}
    lhs = pyk.poly_mul(p, s)
    a, b = pyk.poly_mul(p, q), pyk.poly_mul(p, r)
    for m, c in b.items():
        a[m] = a.get(m, 0) + c
    assert lhs == {m: c for m, c in a.items() if c}


@given(int_matrices)
def test_echelon_rank_matches_sympy(mat):
    rows, n = mat
    red, piv = pyk.echelon(rows, n)
    want = sp.Matrix(rows).rank() if rows else 0
    assert len(red) == len(piv) == want
    for r, c in zip(red, piv):
        assert r[c] > 0
        assert all(other[c] == 0 for other in red if other is not r)


@needs_ext
@given(monomials(), monomials())
def test_backends_agree_on_monomials(a, b):
    assert cyk.mono_mul(a, b) == pyk.mono_mul(a, b)
    assert cyk.mono_div(a, b) == pyk.mono_div(a, b)


@needs_ext
@given(polys, polys)
def test_backends_agree_on_poly_mul(p, q):
    assert cyk.poly_mul(p, q) == pyk.poly_mul(p, q)


@needs_ext
@given(int_matrices)
def test_backends_agree_on_echelon(mat):
    rows, n = mat
    assert cyk.echelon(rows, n) == pyk.echelon(rows, n)


@needs_ext
@settings(max_examples=30)
@given(st.dictionaries(monomials(), st.fractions(max_denominator=7).filter(bool), max_size=4))
def test_backends_agree_on_fraction_coefficients(p):
    assert cyk.poly_mul(p, p) == pyk.poly_mul(p, p)
    assert all(isinstance(c, (int, Fraction)) for c in cyk.poly_mul(p, p).values())
