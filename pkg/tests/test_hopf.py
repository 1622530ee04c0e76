import pytest

from hopftwist import InvalidHopfData, NotConvolutionInvertible, validate_hopf
from hopftwist.arith import ONE, SparsePoly, substitute
from hopftwist.hopf import (
    CoalgebraData,
    HopfData,
    LinMap,
    convolution,
    convolution_inverse,
    counit_map,
    free_hopf_coproduct,
    is_right_integral,
    prime_variables,
    t_map,
    tensor_coalgebra,
    theta,
    theta_matrix,
)
from hopftwist.presets import group_algebra, group_function_algebra, matrix_coalgebra, sweedler_hopf
from hopftwist.twist import counit_assignment

P = SparsePoly.var


@pytest.mark.parametrize(
    "h",
    [sweedler_hopf(), group_algebra("Z3"), group_function_algebra("Z3")],
    ids=["H4", "kZ3", "k^Z3"],
)
def test_presets_satisfy_the_axioms(h):
    assert validate_hopf(h) == []
    assert h.is_valid()


def test_broken_antipode_is_reported():
    g = group_algebra("Z3")
    bad = HopfData(
        g.coalg,
        [(p, q, i, c) for p in range(3) for q in range(3) for i, c in g.mult[p][q]],
        g.unit,
        [[1 if i == j else 0 for i in range(3)] for j in range(3)],
    )
    assert any(r["axiom"] == "antipode" for r in validate_hopf(bad))
    with pytest.raises(InvalidHopfData):
        bad.require_valid()


def test_non_coassociative_coalgebra_is_reported():
    c = CoalgebraData(["u", "v"], [(0, 0, 1, 1), (1, 1, 1, 1)], [1, 1], register=False)
    assert not c.is_valid()


def test_convolution_unit_and_inverse():
    h = sweedler_hopf()
    t = t_map(h)
    ti = convolution_inverse(t)
    eps = counit_map(h)
    assert convolution(t, ti) == eps
    assert convolution(ti, t) == eps
    assert convolution(eps, t) == t


def test_non_invertible_form():
    h = sweedler_hopf()
    with pytest.raises(NotConvolutionInvertible):
        convolution_inverse(LinMap(h.coalg, [0, 1, 0, 0]))


def test_tensor_coalgebra_labels():
    h = sweedler_hopf()
    hh = tensor_coalgebra(h.coalg, h.coalg)
    assert hh.dim == 16 and hh.labels[6] == "x_y"
    assert hh.is_valid()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_theta_is_grouplike_with_unit_counit(n):
    for c in (group_algebra(f"Z{n}"), group_function_algebra(f"Z{n}")):
        th = theta(c)
        assert substitute(th, counit_assignment(c)) == 1
        assert free_hopf_coproduct(th, c) == prime_variables(th, c, 1) * prime_variables(th, c, 2)


def test_dedekind_cubic():
    th = theta(group_function_algebra("Z3"))
    e, g, g2 = P("t_e"), P("t_g"), P("t_g2")
    assert th == e**3 + g**3 + g2**3 - 3 * e * g * g2


def test_full_theta_is_a_power_of_the_reduced_norm():
    m2 = matrix_coalgebra(2)
    assert theta(m2, full=True) == theta(m2) ** 2
    h = sweedler_hopf()
    assert theta(h) == P("t_1") * P("t_x")
    assert theta(h, full=True) == theta(h) ** 2


def test_theta_matrix_shape():
    m = theta_matrix(matrix_coalgebra(2))
    assert len(m) == 4 and all(len(r) == 4 for r in m)


def test_integral_checker():
    h = sweedler_hopf()
    assert is_right_integral(h, LinMap(h.coalg, [0, 0, 0, 1]))
    assert not is_right_integral(h, LinMap(h.coalg, [0, 0, 1, 0]))
    assert not is_right_integral(h, LinMap(h.coalg, [ONE, 0, 0, 0]))


def _s3():
    import itertools

    perms = list(itertools.permutations(range(3)))
    labels = ["".join(map(str, p)) for p in perms]
    table = [[labels[perms.index(tuple(p[q[i]] for i in range(3)))] for q in perms] for p in perms]
    return {"elements": labels, "table": table}


def test_nonabelian_dedekind_determinant():
    # irreducible degrees of S3 are 1, 1, 2: det M has degree 1 + 1 + 2*2, the reduced norm 1 + 1 + 2
    h = group_function_algebra(_s3())
    assert validate_hopf(h) == []
    red, full = theta(h), theta(h, full=True)
    assert (red.degree(), full.degree()) == (4, 6)
    assert full.try_divide(red) is not None
    assert substitute(red, counit_assignment(h)) == 1
    g = group_algebra(_s3())
    assert theta(g) == theta(g, full=True)
