"""Yetter-Drinfeld modules over H obtained from simple modules of the double."""
import itertools
import random

import pytest

from hopfkit.linalg import Matrix, kron, rank, solve
from hopfkit.presets import psi_matrix
from hopfkit.rep import LAMBDA, one_dim_module
from hopfkit.scalar import ONE, ZERO, fe
from hopfkit.yd import (braiding, braiding_between, compare_closed_forms, dual_yd, direct_sum,
                        expected_braiding, tensor_product, translate, trivial_yd,
                        verify_braid_equation, verify_yd, yd_hom_dim)

CHARS = [(i, j, k) for i in range(2) for j in range(2) for k in range(4)]
ALL = CHARS + LAMBDA


@pytest.fixture(scope="module")
def yds():
    return {p: translate(p) for p in ALL}


@pytest.mark.parametrize("p", ALL)
def test_yd_condition_and_braid_equation(yds, p):
    y = yds[p]
    assert verify_yd(y).ok
    c = braiding(y)
    assert verify_braid_equation(c, y.dim)
    assert rank(c) == y.dim ** 2


def _coaction_grouplike(H, A, i, j):
    """The grouplike of H pairing with psi(f) as the character chi_{ij} of A."""
    vals = []
    for word in A.words:
        v = ONE
        for letter in word:
            v = v * {"g": fe((-1) ** i), "h": fe((-1) ** j), "x": ZERO}[letter]
        vals.append(v)
    sol = solve(psi_matrix().transpose(), vals)
    return {t: c for t, c in enumerate(sol) if c}


@pytest.mark.parametrize("p", CHARS)
def test_character_braiding_oracle(yds, H, A, D, p):
    """q = chi(g) where delta(v) = g (x) v; g is read off the characters of A."""
    i, j, k = p
    g = _coaction_grouplike(H, A, i, j)
    # the coaction computed from the dual basis is exactly v -> g (x) v
    assert {m: C.data[0][0] for m, C in enumerate(yds[p].coaction) if C.data[0][0]} == g
    q = one_dim_module(i, j, k).act_vec(D.right(g)).data[0][0]
    assert braiding(yds[p]).data[0][0] == q


# printed character table: j = 0 -> (-1)^{ik}, j = 1 -> -(-1)^{(i+1)k}
DISAGREE = {(0, 1, 1), (0, 1, 3), (1, 1, 0), (1, 1, 2)}


@pytest.mark.parametrize("p", CHARS)
def test_character_braiding_printed(yds, p):
    q = braiding(yds[p]).data[0][0]
    printed = expected_braiding(p).data[0][0]
    if p in DISAGREE:
        assert q == -printed
    else:
        assert q == printed
    i, j, k = p
    # what the computation gives in closed form
    s = fe(-1)
    assert q == (s ** (i * k) if j == 0 else -(s ** (i * (k + 1))))


@pytest.mark.parametrize("p", LAMBDA)
def test_two_dim_closed_forms_logged(yds, p):
    rep = compare_closed_forms(p, yds[p])
    assert all(c.status in ("pass", "mismatch-logged") for c in rep.checks)


def test_coaction_closed_forms_mostly_agree(yds):
    n_ok = sum(c.status == "pass" for p in LAMBDA
               for c in compare_closed_forms(p, yds[p]).checks if c.name.startswith("coaction"))
    assert n_ok == 64


@pytest.mark.parametrize("p", ALL)
def test_simple_as_yd_module(yds, p):
    assert yd_hom_dim(yds[p], yds[p]) == 1


def test_pairwise_non_isomorphic(yds):
    for p, q in itertools.combinations(ALL, 2):
        if yds[p].dim == yds[q].dim:
            assert yd_hom_dim(yds[p], yds[q]) == 0


@pytest.mark.parametrize("p", LAMBDA[::5] + CHARS[::5])
def test_dual_yd(yds, p):
    y = yds[p]
    yd = dual_yd(y)
    assert verify_yd(yd).ok
    assert verify_braid_equation(braiding(yd), yd.dim)


def test_trivial_and_sum(H, yds):
    t = trivial_yd(H, 2)
    assert verify_yd(t).ok
    assert braiding(t) == _perm(2, 2)
    s = direct_sum([yds[(1, 0, 1)], yds[(0, 1, 0, 0)]])
    assert verify_yd(s).ok and s.dim == 3
    assert verify_braid_equation(braiding(s), 3)


def _perm(d1, d2):
    """flip: V1 (x) V2 -> V2 (x) V1."""
    n = d1 * d2
    P = Matrix.zeros(n, n)
    for a in range(d1):
        for b in range(d2):
            P.data[b * d1 + a][a * d2 + b] = ONE
    return P


def test_hexagons_and_naturality(yds):
    rng = random.Random(4)
    picks = rng.sample(ALL, 6)
    pairs = list(zip(picks[::2], picks[1::2])) + [((1, 0, 1), (2, 1, 0, 0)), ((0, 1, 0, 0), (0, 1, 0, 0))]
    for pu, pv in pairs[:5]:
        U, V = yds[pu], yds[pv]
        W = yds[rng.choice(ALL)]
        UV = tensor_product(U, V)
        VW = tensor_product(V, W)
        assert verify_yd(UV).ok
        du, dv, dw = U.dim, V.dim, W.dim
        Iu, Iv, Iw = (Matrix.identity(x) for x in (du, dv, dw))
        # c_{U, V(x)W} = (id_V (x) c_{U,W}) (c_{U,V} (x) id_W)
        lhs = braiding_between(U, VW)
        rhs = kron(Iv, braiding_between(U, W)) @ kron(braiding_between(U, V), Iw)
        assert lhs == rhs
        # c_{U(x)V, W} = (c_{U,W} (x) id_V) (id_U (x) c_{V,W})
        lhs = braiding_between(UV, W)
        rhs = kron(braiding_between(U, W), Iv) @ kron(Iu, braiding_between(V, W))
        assert lhs == rhs
        # c_{U,V} is a morphism of YD modules U(x)V -> V(x)U
        VU = tensor_product(V, U)
        c = braiding_between(U, V)
        for i in range(16):
            assert c @ UV.action[i] == VU.action[i] @ c
            assert c @ UV.coaction[i] == VU.coaction[i] @ c
