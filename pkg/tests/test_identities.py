import os
import subprocess
import sys

import oracles
import pytest
from hypothesis import given, settings, strategies as st

from hopftwist import ParseError, ResourceLimit
from hopftwist.arith import ONE, parse
from hopftwist.identities import (
    FreePoly,
    check_comodule_law,
    coinv_generator,
    free_coaction,
    identity_search,
    is_coinvariant,
    is_identity,
    mu_alpha,
    mu_sigma,
    trivially_coacted,
)
from hopftwist.presets import SWEEDLER_LABELS, group_algebra, carry_cocycle
from hopftwist.twist import twist

# kernel dimensions of μ_α on H4 at (a, b, c) = (1, 0, 1), frozen from the oracle
FROZEN_DIMS = {0: 0, 1: 0, 2: 3, 3: 35, 4: 202}
words = st.lists(st.integers(0, 3), min_size=0, max_size=3).map(tuple)


def fp(text):
    return FreePoly.parse(text, SWEEDLER_LABELS)


@pytest.mark.parametrize("degree", [0, 1, 2, 3])
def test_oracle_agrees_with_frozen_dims(degree):
    assert oracles.identity_kernel_dim(degree)[0] == FROZEN_DIMS[degree]


@pytest.mark.parametrize("degree", sorted(FROZEN_DIMS))
def test_kernel_dims(degree, h4_101):
    res = identity_search(degree, h4_101)
    assert res.kernel_dim == FROZEN_DIMS[degree]
    assert res.verified and res.n_cols == 4**degree


def test_symbolic_degree_two(h4_alg):
    res = identity_search(2, h4_alg)
    assert res.kernel_dim == 3
    assert all(is_identity(p, h4_alg) for p in res.basis)


def test_threads_give_the_same_kernel(h4_101):
    fresh = twist(h4_101.hopf, h4_101.cocycle)
    assert identity_search(3, fresh, threads=4).kernel_dim == FROZEN_DIMS[3]


def test_column_cap(h4_101, monkeypatch):
    with pytest.raises(ResourceLimit):
        identity_search(3, h4_101, cap=10)
    monkeypatch.setenv("HOPFTWIST_COLUMN_CAP", "20")
    with pytest.raises(ResourceLimit):
        identity_search(3, h4_101)
    monkeypatch.setenv("HOPFTWIST_COLUMN_CAP", "lots")
    with pytest.raises(ParseError):
        identity_search(1, h4_101)


def test_pure_python_backend_agrees():
    code = (
        "from hopftwist import BACKEND, identity_search, twist, presets\n"
        "h, a = presets.sweedler(1, 0, 1)\n"
        "print(BACKEND, identity_search(3, twist(h, a)).kernel_dim)\n"
    )
    env = dict(os.environ, HOPFTWIST_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", str(FROZEN_DIMS[3])]


@settings(max_examples=40)
@given(words)
def test_comodule_law_on_words(h4_alg, w):
    assert check_comodule_law(FreePoly.word(w), h4_alg)


@given(words, words)
def test_mu_is_multiplicative(h4_alg, u, v):
    lhs = mu_alpha(FreePoly.word(u + v), h4_alg).coords
    a, b = mu_alpha(FreePoly.word(u), h4_alg).coords, mu_alpha(FreePoly.word(v), h4_alg).coords
    assert list(lhs) == list(h4_alg.mul(a, b))


@given(words)
def test_coinv_generators_are_coinvariant(h4_alg, w):
    h = h4_alg.hopf
    p = coinv_generator(tuple(h.labels[i] for i in w), h)
    assert free_coaction(p, h) == trivially_coacted(p, h)
    assert is_coinvariant(p, h4_alg)


def test_coinv_generator_of_y(h4):
    h, _ = h4
    assert coinv_generator(("y",), h) == fp("X_1 X_z + X_y X_x")


def test_mu_sigma_sends_letters_to_basis(h4_alg):
    for i, lab in enumerate(SWEEDLER_LABELS):
        got = mu_sigma(FreePoly.letter(i), h4_alg)
        assert [c.is_zero() for c in got.coords] == [k != i for k in range(4)]
        assert got.coords[i] == ONE


def test_freepoly_parse_and_print():
    p = fp("X_x X_y - (b/a) X_1 X_1 + 2")
    assert p.degree() == 2
    assert fp(p.to_str(SWEEDLER_LABELS)) == p
    assert (p - p).is_zero()
    assert fp("X_x X_y").commutator(fp("X_z")) == fp("X_x X_y X_z - X_z X_x X_y")
    with pytest.raises(ParseError):
        fp("X_w")


def test_symmetric_group_cocycle_gives_commutator_identities():
    g = group_algebra("Z3")
    alg = twist(g, carry_cocycle(g, parse("2")))
    res = identity_search(2, alg)
    assert res.kernel_dim == 3
    for i in range(3):
        for j in range(i + 1, 3):
            assert is_identity(FreePoly.letter(i).commutator(FreePoly.letter(j)), alg)
    assert identity_search(1, alg).kernel_dim == 0
