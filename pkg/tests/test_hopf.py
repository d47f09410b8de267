"""H, A and H*: presentation tables, the map psi and generic Hopf invariants."""
import pytest
from hypothesis import given, strategies as st

from hopfkit.hopf import (verify_hopf_axioms, dual_hopf, cop, op, bop, group_algebra,
                          hopf_morphism_check, grouplikes, coradical, radical_dim,
                          is_grouplike, skew_primitives, tensor_mul)
from hopfkit.linalg import Matrix, rank, solve, vec_rank
from hopfkit.presets import psi_matrix, psi_closed_form, psi_generator_images, G_alg
from hopfkit.scalar import ONE, ZERO, XI, SQRT2, fe
from hopfkit.sparse import to_dense
from conftest import field_elements

# linear basis of H
H_BASIS = ["1", "a", "a^2", "a^3", "d", "da", "da^2", "da^3",
           "b", "c", "ba", "ca", "ba^2", "ca^2", "ba^3", "ca^3"]

# comultiplication table of H
DELTA = {
    "a": [("a", "a"), ("b", "c")], "b": [("a", "b"), ("b", "d")],
    "c": [("c", "a"), ("d", "c")], "d": [("d", "d"), ("c", "b")],
    "a^2": [("a^2", "a^2")], "a^3": [("a^3", "a^3"), ("ba^2", "ca^2")],
    "da": [("da", "da")], "da^2": [("da^2", "da^2"), ("ca^2", "ba^2")],
    "da^3": [("da^3", "da^3")], "ba": [("ba", "da"), ("a^2", "ba")],
    "ca": [("ca", "a^2"), ("da", "ca")], "ba^2": [("ba^2", "da^2"), ("a^3", "ba^2")],
    "ca^2": [("ca^2", "a^3"), ("da^2", "ca^2")], "ba^3": [("ba^3", "da^3"), ("1", "ba^3")],
    "ca^3": [("ca^3", "1"), ("da^3", "ca^3")], "1": [("1", "1")],
}


def test_basis_and_dimension(H):
    assert H.dim == 16
    assert sorted(H.basis) == sorted(H_BASIS)


def test_full_axiom_suite(H):
    rep = verify_hopf_axioms(H, mode="full")
    assert rep.ok, rep.to_text()
    assert rep.get("associativity").detail == "16x16x16 triples"


@pytest.mark.parametrize("label", sorted(DELTA))
def test_comultiplication_table(H, label):
    want = {(H.index(l), H.index(r)): ONE for l, r in DELTA[label]}
    assert H.delta(H.e(label)) == want


def test_counit_and_antipode(H):
    assert [H.eps(H.e(x)) for x in "abcd"] == [ONE, ZERO, ZERO, ONE]
    w = H.word
    assert H.S(H.e("a")) == H.e("a^3")
    assert H.S(H.e("d")) == w("ddd")
    assert H.S(H.e("b")) == {H.index("ca^2"): XI}
    assert H.S(H.e("c")) == {H.index("ba^2"): -XI}


@pytest.mark.parametrize("lhs,rhs,coef", [
    ("aaaa", "", 1), ("dddd", "", 1), ("aadd", "", 1), ("ad", "da", 1),
    ("ab", "ba", XI), ("ac", "ca", XI), ("bd", "db", XI), ("cd", "dc", XI),
    ("bd", "ca", 1), ("ba", "cd", 1),
])
def test_defining_relations(H, lhs, rhs, coef):
    assert H.word(lhs) == {k: fe(coef) * v for k, v in H.word(rhs).items()}


@pytest.mark.parametrize("word", ["bb", "cc", "bc", "cb"])
def test_nilpotent_relations(H, word):
    assert H.word(word) == {}


def test_grouplikes_and_coradical(H):
    # grouplikes read off the table: 1, a^2, da, da^3
    G = grouplikes(H)
    assert sorted(H.label(g) for g in G) == sorted(["1", "a^2", "da", "da^3"])
    assert len(coradical(H)) == 12


def test_coradical_not_a_subalgebra(H):
    C0 = coradical(H)
    base = vec_rank(C0)
    a = to_dense(H.e("a"), 16)
    assert vec_rank(C0 + [a]) == base
    ab = to_dense(H.mul(H.e("a"), H.e("b")), 16)
    assert vec_rank(C0 + [ab]) > base


# --- the dual side ---------------------------------------------------------

def test_dual_is_involution(H):
    DD = dual_hopf(dual_hopf(H))
    assert all(DD.mult[i][j] == H.mult[i][j] for i in range(16) for j in range(16))
    assert all(sorted(DD.comult[i]) == sorted(H.comult[i]) for i in range(16))
    assert DD.antipode == H.antipode and DD.counit == H.counit


def test_dual_tilde_elements(Hd):
    """g~, h~, x~ in H* and their relations, written in the dual basis."""
    imgs = psi_generator_images(x_scale=ONE)
    g, h, x = imgs["g"], imgs["h"], imgs["x"]
    e = Hd.unit
    mul = Hd.mul
    assert mul(mul(g, g), mul(g, g)) == e
    assert mul(h, h) == e
    assert mul(h, g) == mul(g, h)
    assert mul(g, x) == mul(x, g)
    assert mul(h, x) == {k: -c for k, c in mul(x, h).items()}
    assert is_grouplike(Hd, g) and is_grouplike(Hd, h)
    gh = mul(g, h)
    want = {}
    for i, c in x.items():
        for j, d in e.items():
            want[(i, j)] = want.get((i, j), ZERO) + c * d
    for i, c in gh.items():
        for j, d in x.items():
            want[(i, j)] = want.get((i, j), ZERO) + c * d
    assert Hd.delta(x) == {k: v for k, v in want.items() if v}


def test_grouplikes_of_dual(Hd):
    G = grouplikes(Hd)
    assert len(G) == 8
    # closed under products: a group of order 8 with an element of order 4
    assert all(any(Hd.mul(g, h) == k for k in G) for g in G for h in G)


def test_psi_is_hopf_isomorphism(A, Hd):
    P = psi_matrix()
    assert rank(P) == 16
    rep = hopf_morphism_check(P, A, Hd)
    assert rep.ok, rep.to_text()


def test_psi_closed_forms(A):
    P = psi_matrix()
    for k, lab in enumerate(A.basis):
        col = {r: P.data[r][k] for r in range(16) if P.data[r][k]}
        assert psi_closed_form(lab) == col, lab


def _rho(A, which):
    s = XI if which == 1 else -XI
    gens = {"g": Matrix([[s, ZERO], [ZERO, s]]),
            "h": Matrix([[ONE, ZERO], [ZERO, -ONE]]),
            "x": Matrix([[ZERO, SQRT2], [SQRT2, ZERO]])}
    out = []
    for word in A.words:
        M = Matrix.identity(2)
        for letter in word:
            M = M @ gens[letter]
        out.append(M)
    return out


def _comatrix(A, which):
    """Elements E_ij o rho of A* = H, transported through psi."""
    P = psi_matrix()
    Pt = P.transpose()
    rho = _rho(A, which)
    out = {}
    for i in range(2):
        for j in range(2):
            v = solve(Pt, [rho[k].data[i][j] for k in range(16)])
            assert v is not None
            out[(i + 1, j + 1)] = {t: c for t, c in enumerate(v) if c}
    return out


def test_comatrix_identification(H, A):
    C = _comatrix(A, 1)
    assert C[(1, 1)] == H.e("a") and C[(1, 2)] == H.e("b")
    assert C[(2, 1)] == H.e("c") and C[(2, 2)] == H.e("d")


def test_comatrix_relations(H, A):
    C, Dm = _comatrix(A, 1), _comatrix(A, 2)
    S, mul = H.S, H.mul
    sc = lambda c, v: {k: c * x for k, x in v.items()}
    assert S(C[1, 2]) == sc(XI, Dm[2, 1]) and S(C[2, 1]) == sc(-XI, Dm[1, 2])
    assert S(C[1, 1]) == Dm[1, 1] and S(C[2, 2]) == Dm[2, 2]
    assert S(Dm[1, 2]) == sc(-XI, C[2, 1]) and S(Dm[2, 1]) == sc(XI, C[1, 2])
    assert S(Dm[1, 1]) == C[1, 1] and S(Dm[2, 2]) == C[2, 2]
    assert mul(C[1, 1], C[1, 2]) == sc(XI, mul(C[1, 2], C[1, 1]))
    assert mul(C[1, 1], C[2, 1]) == sc(XI, mul(C[2, 1], C[1, 1]))
    assert mul(C[2, 2], C[1, 2]) == sc(-XI, mul(C[1, 2], C[2, 2]))
    assert mul(C[2, 2], C[2, 1]) == sc(-XI, mul(C[2, 1], C[2, 2]))
    assert mul(C[1, 2], C[2, 2]) == mul(C[2, 1], C[1, 1])
    assert mul(C[1, 2], C[1, 1]) == mul(C[2, 1], C[2, 2])
    assert mul(C[1, 1], C[1, 2]) == sc(-ONE, mul(C[2, 2], C[2, 1]))
    assert mul(C[2, 2], C[1, 2]) == sc(-ONE, mul(C[1, 1], C[2, 1]))
    assert mul(C[1, 1], C[2, 2]) == mul(C[2, 2], C[1, 1])


def _character(A, i, j):
    P = psi_matrix()
    vals = []
    for word in A.words:
        v = ONE
        for letter in word:
            v = v * {"g": fe((-1) ** i), "h": fe((-1) ** j), "x": ZERO}[letter]
        vals.append(v)
    h = solve(P.transpose(), vals)
    return {t: c for t, c in enumerate(h) if c}


def test_generated_by_simple_subcoalgebra(H, A):
    w = H.word
    assert w("aa") == _character(A, 1, 0)
    assert w("ad") == _character(A, 1, 1)
    assert w("ddaa") == H.unit
    assert w("aaad") == _character(A, 0, 1)
    words = ["aaa", "ddd", "aa", "ad", "ddaa", "aaad", "a", "d", "b", "c",
             "ab", "ac", "aab", "aac", "aaab", "aaac"]
    assert vec_rank([to_dense(w(x), 16) for x in words]) == 16


# --- generic constructions ------------------------------------------------

@pytest.mark.parametrize("make", [cop, op, bop, dual_hopf])
def test_derived_structures(H, make):
    assert verify_hopf_axioms(make(H), mode="full").ok


def test_small_algebras():
    assert verify_hopf_axioms(group_algebra(6), mode="full").ok
    G = G_alg()
    assert verify_hopf_axioms(G, mode="full").ok
    # Delta(x) = x (x) 1 + gh (x) x; the (gh, 1)-skew primitives are x and 1 - gh
    gh = G.word("gh")
    assert len(skew_primitives(G, gh, G.unit)) == 2
    assert len(skew_primitives(G, G.unit, gh)) == 1


def test_semisimple_radicals(H, A):
    assert radical_dim(group_algebra(8)) == 0
    # span{ba^i, ca^i} is an ideal with square zero and H / (b, c) = k[a, d] is
    # a group algebra of order 8
    assert radical_dim(H) == 8


vec16 = st.dictionaries(st.integers(0, 15), field_elements(), max_size=4)


@given(vec16, vec16)
def test_delta_multiplicative(u, v):
    from hopfkit.presets import H_alg
    H = H_alg()
    assert H.delta(H.mul(u, v)) == tensor_mul(H, H.delta(u), H.delta(v))
    assert H.eps(H.mul(u, v)) == H.eps(u) * H.eps(v)


@given(vec16, vec16)
def test_antipode_antimultiplicative(u, v):
    from hopfkit.presets import Hdual
    for K in (Hdual(),):
        assert K.S(K.mul(u, v)) == K.mul(K.S(v), K.S(u))
