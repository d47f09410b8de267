"""Nichols algebras of the translated simples."""
import itertools
from math import comb

import pytest

from hopfkit.linalg import Matrix
from hopfkit.nichols import (LAMBDA0, LAMBDA_SETS, MAX_DEGREE, BraidedVS, DegreeTooLarge, NotABraiding,
                             braided_space, check_relation_membership, classify, dual_infinite_certificate,
                             eigenvalue_one_certificate, lambda_class, matsumoto_check, new_relations,
                             nichols_dims, presented_quotient_dims, printed_relations, quantum_symmetrizer,
                             symmetrizer_explicit)
from hopfkit.scalar import ONE, XI
from hopfkit.yd import direct_sum, dual_yd, translate

FINITE2 = [p for c in (3, 4, 5, 6) for p in LAMBDA_SETS[c]]
CHARS = [(i, j, k) for i in range(2) for j in range(2) for k in range(4)]


def _flip(d, sign=ONE, q=None):
    """sign * flip, or the diagonal braiding c(v_i v_j) = q_ij v_j v_i."""
    c = Matrix.zeros(d * d, d * d)
    for i in range(d):
        for j in range(d):
            c.data[j * d + i][i * d + j] = sign if q is None else q[i][j]
    return BraidedVS(d, c)


@pytest.fixture(scope="module")
def spaces():
    return {p: braided_space(translate(p)) for p in CHARS + [p for c in range(1, 7) for p in LAMBDA_SETS[c]]}


# --- independent oracles on textbook braidings ---------------------------

@pytest.mark.parametrize("d", [1, 2, 3])
def test_exterior_algebra(d):
    r = nichols_dims(_flip(d, -ONE).check(), 5)
    assert r.verdict == "finite"
    assert r.dims == [comb(d, n) for n in range(d + 1)] + [0]
    assert r.total == 2 ** d and r.palindromic


def test_symmetric_algebra():
    r = nichols_dims(_flip(2).check(), 5)
    assert r.dims == [n + 1 for n in range(6)]
    assert r.verdict == "infinite"


def test_quantum_line():
    # c(v v) = q v v with q a primitive 4th root: B(V) = k[v]/(v^4)
    r = nichols_dims(_flip(1, q=[[XI]]).check(), 6)
    assert r.dims == [1, 1, 1, 1, 0] and r.total == 4


def test_quantum_plane():
    # q_11 = q_22 = -1, q_12 q_21 = 1: exterior-type, total 4
    r = nichols_dims(_flip(2, q=[[-ONE, XI], [-XI, -ONE]]).check(), 5)
    assert r.dims == [1, 2, 1, 0] and r.total == 4


def test_bad_braiding_rejected():
    c = Matrix.identity(4)
    c.data[0][1] = ONE
    with pytest.raises(NotABraiding):
        BraidedVS(2, c).check()
    with pytest.raises(NotABraiding):
        BraidedVS(2, Matrix.identity(3))


def test_degree_cap():
    with pytest.raises(DegreeTooLarge):
        quantum_symmetrizer(_flip(1, -ONE), MAX_DEGREE + 1)


# --- symmetrizer construction ---------------------------------------------

@pytest.mark.parametrize("p", [(0, 1, 0, 0), (1, 3, 0, 1), (0, 1, 1, 0), (1, 1, 1, 1)])
def test_factorised_symmetrizer_matches_sum(spaces, p):
    b = spaces[p]
    for n in (2, 3, 4):
        assert quantum_symmetrizer(b, n) == symmetrizer_explicit(b, n)


@pytest.mark.parametrize("p", [(0, 1, 0, 0), (3, 3, 1, 1), (2, 1, 0, 0)])
def test_matsumoto(spaces, p):
    b = spaces[p]
    assert matsumoto_check(b, 4)
    assert matsumoto_check(b, 5, samples=20, seed=1)


# --- the classification -----------------------------------------------------

@pytest.mark.parametrize("p", FINITE2)
def test_finite_two_dim(spaces, p):
    r = nichols_dims(spaces[p], 6)
    assert r.verdict == "finite"
    assert r.dims == [1, 2, 2, 2, 1, 0] and r.total == 8 and r.palindromic


@pytest.mark.parametrize("p", FINITE2)
def test_presented_quotient_matches(spaces, p):
    b = spaces[p]
    want = nichols_dims(b, 6).dims
    for variant in ("statement", "proof"):
        got = presented_quotient_dims(b, printed_relations(p, variant), 6)
        assert got == want + [0] * (len(got) - len(want))


@pytest.mark.parametrize("p", FINITE2)
def test_printed_relations_in_kernel(spaces, p):
    for rel in printed_relations(p):
        assert check_relation_membership(spaces[p], rel)


@pytest.mark.parametrize("p", [LAMBDA_SETS[3][0], LAMBDA_SETS[6][1]])
def test_new_relations_degrees(spaces, p):
    b = spaces[p]
    assert len(new_relations(b, 2)) == 2
    assert len(new_relations(b, 3)) == 0
    assert len(new_relations(b, 4)) == 1


@pytest.mark.parametrize("p", FINITE2)
def test_duality(spaces, p):
    y = translate(p)
    assert nichols_dims(braided_space(dual_yd(y)), 6).dims == nichols_dims(spaces[p], 6).dims


@pytest.mark.parametrize("p", LAMBDA_SETS[1])
def test_lambda1_eigenvalue_one(spaces, p):
    v = eigenvalue_one_certificate(spaces[p])
    assert v is not None
    r = classify(p)
    assert r.verdict == "infinite" and r.kind == "eigenvalue-one"
    assert r.dims[6] > 0


@pytest.mark.parametrize("p", LAMBDA_SETS[2])
def test_lambda2_dual_route(spaces, p):
    q = dual_infinite_certificate(p)
    assert q is not None and q in LAMBDA_SETS[1] + LAMBDA_SETS[2]
    assert eigenvalue_one_certificate(spaces[q]) is not None
    r = classify(p)
    assert r.verdict == "infinite" and r.dims[6] > 0


def test_finite_characters(spaces):
    """Characters with finite Nichols algebra are those with braiding -1."""
    finite = []
    for p in CHARS:
        r = classify(p)
        q = spaces[p].c.data[0][0]
        assert (r.verdict == "finite") == (q == -ONE)
        if r.verdict == "finite":
            assert r.dims == [1, 1, 0]
            finite.append(p)
        else:
            assert r.dims == [1] * 7
    assert len(finite) == 8
    # the displayed list differs in two members
    assert set(finite) ^ set(LAMBDA0) == {(0, 1, 1), (0, 1, 3), (1, 1, 0), (1, 1, 2)}


def _finite_chars():
    return [p for p in CHARS if classify(p).verdict == "finite"]


@pytest.mark.parametrize("k", [2, 3])
def test_exterior_sums_of_one_character(k):
    for p in _finite_chars():
        r = nichols_dims(braided_space(direct_sum([translate(p)] * k)), k + 2)
        assert r.total == 2 ** k
        assert r.dims == [comb(k, n) for n in range(k + 1)] + [0]


def test_sums_of_two_characters_match_diagonal_oracle():
    """Sums of finite characters are diagonal braidings; compare with the
    textbook diagonal braiding assembled from the four scalars alone."""
    seen = set()
    for p, q in itertools.combinations(_finite_chars(), 2):
        b = braided_space(direct_sum([translate(p), translate(q)]))
        c = b.c.data
        Q = [[c[0][0], c[2][1]], [c[1][2], c[3][3]]]
        assert b.c == _flip(2, q=Q).c
        r = nichols_dims(b, 6)
        if Q[0][1] * Q[1][0] == ONE:
            assert r.dims == [1, 2, 1, 0]
        else:
            # q12 q21 = -1 with both lines odd: rank-two type A at -1, not an exterior algebra
            assert Q[0][1] * Q[1][0] == -ONE
            assert r.dims == [1, 2, 2, 2, 1, 0]
        seen.add(Q[0][1] * Q[1][0])
    assert seen == {ONE, -ONE}


def test_lambda_class_partition():
    seen = [p for c in range(1, 7) for p in LAMBDA_SETS[c]]
    assert len(seen) == len(set(seen)) == 32
    assert lambda_class((1, 1, 0)) == 0 and lambda_class((0, 0, 0)) is None
