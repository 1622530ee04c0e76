"""Twelve end-to-end acceptance checks; each prints one PASS/FAIL line.

Run under pytest or directly with ``python tests/test_acceptance.py``.
"""

import random
import sys

import pytest

from hopftwist import (
    FreePoly,
    LinMap,
    NotLazy,
    RatExpr,
    TensorElt,
    augment,
    center,
    center_membership,
    check_cocycle,
    coinv_generator,
    convolution,
    convolution_inverse,
    free_hopf_coproduct,
    identity_search,
    is_central,
    is_coinvariant,
    is_identity,
    lazy_transport,
    mu_alpha,
    right_integral_space,
    specialize,
    tensor_coalgebra,
    theta,
    trace_gram_det,
    twist,
    universal_sigma,
)
from hopftwist.arith import ONE, SparsePoly, register_variables, substitute
from hopftwist.hopf import counit_map, prime_variables, t_map
from hopftwist.identities import check_comodule_law
from hopftwist.presets import (
    SWEEDLER_LABELS,
    carry_cocycle,
    group_algebra,
    group_function_algebra,
    group_niceness_witnesses,
    matrix_coalgebra,
    sweedler,
    sweedler_expected_tables,
    trivial_field,
)
from hopftwist.twist import counit_assignment, group_integrality_witness

V = RatExpr.var


def fp(text):
    return FreePoly.parse(text, SWEEDLER_LABELS, {"E": "1", "X": "x", "Y": "y", "Z": "z"})


def unit_tensor(h, coeff):
    return TensorElt.basis(h.labels, h.unit_index(), coeff)


# -- the twelve checks ------------------------------------------------------


def check_sigma_table():
    h, alpha = sweedler()
    s = universal_sigma(h, alpha)
    exp = sweedler_expected_tables()
    for (x, y), v in exp["sigma"].items():
        assert s.sigma(x, y) == v, (x, y, str(s.sigma(x, y)))
    assert len(exp["sigma"]) == 16
    assert s.sigma("y", "y") == s.sigma("z", "y") == -s.sigma("y", "z")
    assert s.sigma("y", "x") == s.sigma("z", "x")
    for (x, y), v in exp["sigma_inv_unit"].items():
        assert s.sigma_inv(x, y) == v, (x, y)


def check_mu_table():
    h, alpha = sweedler()
    alg = twist(h, alpha)
    rows = sweedler_expected_tables()["mu"]
    assert len(rows) >= 9
    for name, lhs, rhs in rows:
        got = mu_alpha(lhs, alg)
        want = mu_alpha(rhs, alg) if isinstance(rhs, FreePoly) else unit_tensor(h, rhs)
        assert got == want, name


def check_twisted_table():
    h, alpha = sweedler()
    alg = twist(h, alpha)
    exp = sweedler_expected_tables()["twisted"]
    labs = h.labels
    for i, x in enumerate(labs):
        for j, y in enumerate(labs):
            if x == "1" or y == "1":
                want = {y if x == "1" else x: ONE}
            else:
                want = exp[(x, y)]
            got = {labs[k]: v for k, v in enumerate(alg.table[i][j]) if not v.is_zero()}
            assert set(got) == set(want) and all(got[k] == want[k] for k in want), (x, y)
    assert alg.check_associative()
    assert list(alg.unit) == list(h.unit) == [ONE, 0, 0, 0]
    assert alg.check_unit()


def _inverse_pair(c, ci):
    hh = tensor_coalgebra(c.hopf.coalg, c.hopf.coalg)
    eps = counit_map(hh)
    a, b = c.as_linmap(hh), ci.as_linmap(hh)
    return convolution(a, b) == eps and convolution(b, a) == eps


def check_cocycle_laws():
    h, alpha = sweedler()
    s = universal_sigma(h, alpha)
    assert check_cocycle(s.sigma)
    assert _inverse_pair(s.sigma, s.sigma_inv)
    assert augment(s) == alpha
    spec = specialize(s, counit_assignment(h))
    assert spec.table == twist(h, alpha).table
    for n in (2, 3, 4, 5, 6):
        g = group_algebra(f"Z{n}")
        sg = universal_sigma(g, carry_cocycle(g, 3))
        assert check_cocycle(sg.sigma), n
        assert _inverse_pair(sg.sigma, sg.sigma_inv), n


def _counit_value(poly, c):
    return substitute(poly, counit_assignment(c))


def _grouplike(poly, c):
    return free_hopf_coproduct(poly, c) == prime_variables(poly, c, 1) * prime_variables(poly, c, 2)


def check_appendix():
    h, _ = sweedler()
    ti = convolution_inverse(t_map(h))
    t1, tx, ty, tz = V("t_1"), V("t_x"), V("t_y"), V("t_z")
    assert list(ti.values) == [1 / t1, 1 / tx, -ty / (t1 * tx), -tz / (t1 * tx)]

    m2 = matrix_coalgebra(2)
    th = theta(m2)
    P = SparsePoly.var
    assert th == P("t_11") * P("t_22") - P("t_12") * P("t_21")
    assert _counit_value(th, m2) == 1
    assert _grouplike(th, m2)

    for n in (2, 3, 4, 5):
        g = group_algebra(f"Z{n}")
        th = theta(g)
        prod = SparsePoly.const(1)
        for lab in g.labels:
            prod = prod * P(f"t_{lab}")
        assert th == prod, n
        assert _counit_value(th, g) == 1

    f2 = group_function_algebra("Z2")
    th = theta(f2)
    assert th == P("t_e") ** 2 - P("t_g") ** 2
    assert _counit_value(th, f2) == 1
    assert _grouplike(th, f2)


def check_identity_engine():
    h, alpha = sweedler()
    alg = twist(h, alpha)
    for r in (0, 1):
        assert identity_search(r, alg).kernel_dim == 0, r
    hn, an = sweedler(1, 0, 1)
    num = twist(hn, an)
    res = identity_search(4, num)
    assert res.kernel_dim >= 256 - 140
    assert res.verified and all(is_identity(p, num) for p in res.basis)
    rng = random.Random(1729)
    for _ in range(50):
        w = tuple(rng.randrange(4) for _ in range(rng.randint(1, 3)))
        assert check_comodule_law(FreePoly.word(w), alg), w


def check_coinvariants():
    h, alpha = sweedler()
    alg = twist(h, alpha)
    words = [(x,) for x in h.labels] + [(x, y) for x in h.labels for y in h.labels]
    assert len(words) == 20
    for w in words:
        p = coinv_generator(w, h)
        assert is_coinvariant(p, alg), w
        assert is_central(p, alg), w
    s = universal_sigma(h, alpha)
    t1, tx, ty, tz = V("t_1"), V("t_x"), V("t_y"), V("t_z")
    a, b = V("a"), V("b")
    got = mu_alpha(fp("E Z + Y X"), alg)
    assert got == unit_tensor(h, b * t1 * tx + a * tx * ty + t1 * tz)
    assert got == unit_tensor(h, t1 * s.sigma("y", "x"))


def check_centers():
    accept = ["E", "X^2", "Y^2", "X Y + Y X", "X X Z + X Z X", "X Z X Z"]
    reject = ["X", "Y", "Z"]
    for params in ((1, 0, 1), (1, 2, 1), (2, 3, 5)):
        h, alpha = sweedler(*params)
        alg = twist(h, alpha)
        z = center(alg)
        assert len(z) == 1 and all(v.is_zero() for v in z[0][1:]), params
        for text in accept:
            assert center_membership(fp(text), alg, z), (params, text)
        for text in reject:
            assert not center_membership(fp(text), alg, z), (params, text)


def check_trace_certificate():
    h, alpha = sweedler()
    d = trace_gram_det(twist(h, alpha))
    assert d.den.is_constant()
    a, b, c = (SparsePoly.var(n) for n in "abc")
    disc = b * b - 4 * a * c
    num, k = d.num, 0
    while True:
        q = num.try_divide(disc)
        if q is None:
            break
        num, k = q, k + 1
    assert k >= 1 and not d.is_zero()
    for pt in ((1, 2, 1), (1, 0, 1), (4, 4, 1), (1, 4, 4)):
        on_locus = pt[1] ** 2 - 4 * pt[0] * pt[2] == 0
        val = substitute(d, dict(zip("abc", pt)))
        assert (val == 0) == on_locus, pt
        hn, an = sweedler(*pt)
        assert (trace_gram_det(twist(hn, an)) == 0) == on_locus, pt


def check_group_case():
    register_variables(["u"])
    for n in (2, 3, 4):
        g = group_algebra(f"Z{n}")
        alpha = carry_cocycle(g, V("u"))
        s = universal_sigma(g, alpha)
        G = g.group
        t = [V(f"t_{lab}") for lab in g.labels]
        for i in range(n):
            for j in range(n):
                k = G.mul(i, j)
                assert s.sigma.values[i][j] * t[k] == alpha.values[i][j] * t[i] * t[j], (n, i, j)
        alg = twist(g, alpha)
        for name, poly, expected in group_niceness_witnesses(g, alpha):
            assert mu_alpha(poly, alg) == unit_tensor(g, expected), (n, name)
        for i, lab in enumerate(g.labels):
            prod, _ = group_integrality_witness(s, lab, n)
            assert prod == t[i] ** n, (n, lab)


def check_integrals():
    h, _ = sweedler()
    sp = right_integral_space(h)
    assert len(sp) == 1
    assert [v.is_zero() for v in sp[0].values] == [True, True, True, False]
    for n in (2, 3, 4, 5):
        g = group_algebra(f"Z{n}")
        sp = right_integral_space(g)
        assert len(sp) == 1
        e = g.unit_index()
        assert all(v.is_zero() == (i != e) for i, v in enumerate(sp[0].values)), n
    assert len(right_integral_space(trivial_field())) == 1


def check_lazy_transport():
    h, alpha = sweedler()
    assert lazy_transport(alpha, counit_map(h)) == alpha
    g = group_algebra("Z2")
    ag = carry_cocycle(g, 5)
    assert lazy_transport(ag, counit_map(g)) == ag
    beta = lazy_transport(ag, LinMap(g.coalg, [1, 3]))
    assert check_cocycle(beta)
    assert beta("g", "g") == 9 * ag("g", "g")
    with pytest.raises(NotLazy) as exc:
        lazy_transport(alpha, LinMap(h.coalg, [1, 1, 1, 0]))
    assert exc.value.witness == "y"


CRITERIA = [
    (1, "Sweedler sigma table", check_sigma_table),
    (2, "Sweedler mu table", check_mu_table),
    (3, "twisted multiplication table", check_twisted_table),
    (4, "universal cocycle laws", check_cocycle_laws),
    (5, "convolution inverse and Theta", check_appendix),
    (6, "identity engine", check_identity_engine),
    (7, "coinvariance and centrality", check_coinvariants),
    (8, "centers and center membership", check_centers),
    (9, "trace form certificate", check_trace_certificate),
    (10, "group algebra case", check_group_case),
    (11, "right integrals", check_integrals),
    (12, "lazy transport", check_lazy_transport),
]


def run_criterion(num, title, fn, out=print):
    try:
        fn()
    except Exception as exc:
        out(f"FAIL  criterion {num:2d}: {title} ({type(exc).__name__}: {exc})")
        raise
    out(f"PASS  criterion {num:2d}: {title}")


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn, capsys):
    with capsys.disabled():
        run_criterion(num, title, fn, out=lambda s: print("\n" + s))


if __name__ == "__main__":
    failed = 0
    for num, title, fn in CRITERIA:
        try:
            run_criterion(num, title, fn)
        except Exception:
            failed += 1
    sys.exit(1 if failed else 0)
