import oracles
import pytest
import sympy as sp

from hopftwist import CocycleCheckFailed, DenominatorVanishes, ZeroParameter
from hopftwist.arith import ONE, RatExpr, parse
from hopftwist.presets import SWEEDLER_LABELS, carry_cocycle, group_algebra, sweedler, sweedler_cocycle
from hopftwist.twist import (
    Cocycle,
    augment,
    bilinear_convolution,
    check_cocycle,
    check_normalized,
    cocycle_inverse,
    counit_assignment,
    phi,
    sigma_in_localization,
    specialize,
    tinv_of,
    trace_gram_det,
    twist,
    universal_sigma,
)
from hopftwist.hopf import TensorElt

# frozen from the sympy oracle in tests/oracles.py
TRACE_DET = "-16*(b^2 - 4*a*c)^2"


def test_tinv_matches_oracle(h4):
    h, _ = h4
    want = oracles.tinv_h4()
    for got, w in zip(tinv_of(h).values, want):
        assert sp.simplify(oracles.to_sympy(got) - w) == 0


def test_sigma_matches_oracle(h4_sigma):
    want = oracles.sigma_h4()
    for i, x in enumerate(SWEEDLER_LABELS):
        for j, y in enumerate(SWEEDLER_LABELS):
            got = oracles.to_sympy(h4_sigma.sigma(x, y))
            assert sp.simplify(got - want[i, j]) == 0, (x, y)


def test_twisted_table_matches_oracle(h4_alg):
    want = oracles.twisted_table()
    for i in range(4):
        for j in range(4):
            for k in range(4):
                got = oracles.to_sympy(h4_alg.table[i][j][k])
                assert sp.expand(got - want[i][j][k]) == 0


def test_trace_det_matches_oracle(h4_alg):
    d = trace_gram_det(h4_alg)
    assert d == parse(TRACE_DET)
    assert sp.expand(oracles.to_sympy(d) - oracles.trace_gram_det_h4()) == 0


def test_sweedler_needs_nonzero_a():
    h, _ = sweedler()
    with pytest.raises(ZeroParameter):
        sweedler_cocycle(h, 0, 1, 1)


def test_non_cocycle_is_rejected(h4):
    h, alpha = h4
    vals = [list(r) for r in alpha.values]
    vals[2][2] = vals[2][2] + ONE
    bad = Cocycle(h, vals)
    res = check_cocycle(bad)
    assert not res and len(res.witness) == 3
    with pytest.raises(CocycleCheckFailed):
        twist(h, bad)


def test_cocycle_inverse_and_normalization(h4):
    h, alpha = h4
    assert check_normalized(alpha)
    inv = cocycle_inverse(alpha)
    assert bilinear_convolution(alpha, inv) == Cocycle.trivial(h)
    assert bilinear_convolution(inv, alpha) == Cocycle.trivial(h)


def test_unnormalized_cocycle_gets_solved_unit():
    g = group_algebra("Z2")
    k = parse("3")
    alpha = Cocycle(g, [[k * v for v in r] for r in carry_cocycle(g, 2).values])
    alg = twist(g, alpha)
    assert alg.check_unit() and alg.check_associative()
    assert alg.unit[0] == parse("1/3")


def test_phi_round_trip(h4):
    h, _ = h4
    e = TensorElt(h.labels, [parse("a"), parse("b*t_y"), ONE, parse("c")])
    assert phi(phi(e, h), h, "inverse") == e
    with pytest.raises(ValueError):
        phi(e, h, "sideways")


def test_specialize_names_the_vanishing_entry(h4_sigma):
    assign = dict(counit_assignment(h4_sigma.hopf))
    assign["t_1"] = 0
    with pytest.raises(DenominatorVanishes) as exc:
        specialize(h4_sigma, assign)
    assert exc.value.entry.startswith("sigma")


def test_specialize_at_other_points(h4_sigma):
    assign = {"t_1": 2, "t_x": 3, "t_y": 1, "t_z": -1, "a": 1, "b": 2, "c": 5}
    alg = specialize(h4_sigma, assign)
    assert alg.check_associative()


def test_augment_and_localization(h4_sigma):
    assert augment(h4_sigma) == h4_sigma.alpha
    assert sigma_in_localization(h4_sigma)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_group_sigma_closed_form(n):
    g = group_algebra(f"Z{n}")
    alpha = carry_cocycle(g, 7)
    s = universal_sigma(g, alpha)
    G = g.group
    for i in range(n):
        for j in range(n):
            t = RatExpr.var
            want = alpha.values[i][j] * t(f"t_{g.labels[i]}") * t(f"t_{g.labels[j]}") / t(f"t_{g.labels[G.mul(i, j)]}")
            assert s.sigma.values[i][j] == want
