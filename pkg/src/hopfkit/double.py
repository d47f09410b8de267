"""The Drinfeld double D(K) = K*^cop (x) K, built from structure constants.

Carrier basis: e^p (x) e_a with index p * n + a, where e^p is the dual basis
of K.  Multiplication is the standard formula

  (p (x) a)(q (x) b) = <q_(1), S^{-1}(a_(3))> <q_(3), a_(1)> p q_(2) (x) a_(2) b,

computed once for the cross products X(a, q) = (eps (x) a)(q (x) 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .hopf import FinHopf, bop, cop, hopf_morphism_check, map_matrix_from_images
from .linalg import Matrix, inverse
from .report import Report
from .scalar import ONE, ZERO, XI, SQRT2, fe
from .sparse import add_into, add_term

__all__ = ["DoubleAlg", "AntipodeNotInvertible", "drinfeld_double", "double_of_H",
           "verify_presentation", "PROP_RELATIONS", "H_RELATIONS", "A_BOP_RELATIONS",
           "all_relations", "eval_relation", "D_word", "check_basis_words", "the_double"]


class AntipodeNotInvertible(ValueError):
    pass


@dataclass
class DoubleAlg:
    carrier: FinHopf
    K: FinHopf
    # columns: images of K*^cop basis (left) and of K basis (right)
    left_factor: Matrix
    right_factor: Matrix
    # optional presentation data (double of H^cop)
    generators: dict = field(default_factory=dict)
    left_words: list | None = None        # A-words whose products give the left factor
    left_word_inverse: Matrix | None = None
    psi: Matrix | None = None
    A: FinHopf | None = None
    x_scale: object = None

    @property
    def dim(self):
        return self.carrier.dim

    def left(self, vec: dict) -> dict:
        """f (x) 1 for f a sparse vector in the dual basis of K."""
        u = self.K.unit
        n = self.K.dim
        out = {}
        for p, c in vec.items():
            for a, cu in u.items():
                add_term(out, p * n + a, c * cu)
        return out

    def right(self, vec: dict) -> dict:
        """eps (x) h for h a sparse vector in K."""
        n = self.K.dim
        out = {}
        for p, e in enumerate(self.K.counit):
            if e:
                for a, c in vec.items():
                    add_term(out, p * n + a, e * c)
        return out

    def word(self, letters) -> dict:
        return D_word(self, letters)


def D_word(D: DoubleAlg, letters) -> dict:
    out = D.carrier.unit
    for g in letters:
        out = D.carrier.mul(out, D.generators[g])
    return out


def _cross_table(K: FinHopf, Sinv: Matrix):
    """X[a][q] = (eps (x) e_a)(e^q (x) 1) as a list of (q2, a2, coeff)."""
    n = K.dim
    # Delta^2 on K*:  coefficient of e^i (x) e^j (x) e^k in Delta^2(e^q) is [e_i e_j e_k]_q
    byq3 = [dict() for _ in range(n)]      # byq3[q][k] -> list of (i, j, c)
    for i in range(n):
        for j in range(n):
            for l, c in K.mult[i][j].items():
                for k in range(n):
                    for q, c2 in K.mult[l][k].items():
                        byq3[q].setdefault(k, []).append((i, j, c * c2))
    # Delta^2 on K
    d2 = []
    for a in range(n):
        terms = {}
        for a12, a3, c in K.comult[a]:
            for a1, a2, c2 in K.comult[a12]:
                add_term(terms, (a1, a2, a3), c * c2)
        d2.append(terms)
    Si = Sinv.data
    X = [[None] * n for _ in range(n)]
    for a in range(n):
        for q in range(n):
            acc = {}
            bq = byq3[q]
            for (a1, a2, a3), c1 in d2[a].items():
                lst = bq.get(a1)
                if not lst:
                    continue
                for q1, q2, c in lst:
                    s = Si[q1][a3]
                    if s:
                        add_term(acc, (q2, a2), c1 * c * s)
            X[a][q] = list(acc.items())
    return X


def drinfeld_double(K: FinHopf, name: str = "D") -> DoubleAlg:
    n = K.dim
    try:
        Sinv = K.Sinv
    except ZeroDivisionError as exc:
        raise AntipodeNotInvertible(str(exc)) from exc
    # dual algebra K*: e^i e^k = sum_m [Delta(e_m)]_{i,k} e^m
    dmult = [[{} for _ in range(n)] for _ in range(n)]
    for m in range(n):
        for i, k, c in K.comult[m]:
            add_term(dmult[i][k], m, c)
    X = _cross_table(K, Sinv)
    N = n * n
    mult = [[None] * N for _ in range(N)]
    Kmult = K.mult
    for p in range(n):
        dp = dmult[p]
        for a in range(n):
            row = mult[p * n + a]
            Xa = X[a]
            for q in range(n):
                xs = Xa[q]
                for b in range(n):
                    acc = {}
                    for (q2, a2), c in xs:
                        left = dp[q2]
                        if not left:
                            continue
                        right = Kmult[a2][b]
                        for m, cm in left.items():
                            cc = c * cm
                            base = m * n
                            for l, cl in right.items():
                                add_term(acc, base + l, cc * cl)
                    row[q * n + b] = acc
    # coalgebra: tensor product of K*^cop and K
    dcomult = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for p, c in Kmult[i][j].items():
                dcomult[p].append((i, j, c))
    comult = []
    for p in range(n):
        for a in range(n):
            terms = {}
            for i, j, c1 in dcomult[p]:
                for a1, a2, c2 in K.comult[a]:
                    add_term(terms, (j * n + a1, i * n + a2), c1 * c2)
            comult.append([(x, y, c) for (x, y), c in sorted(terms.items())])
    counit = []
    for p in range(n):
        up = K.unit.get(p, ZERO)
        for a in range(n):
            counit.append(up * K.counit[a] if up else ZERO)
    unit = {}
    for p, e in enumerate(K.counit):
        if e:
            for u, cu in K.unit.items():
                add_term(unit, p * n + u, e * cu)
    basis = [f"{K.basis[p]}*#{K.basis[a]}" for p in range(n) for a in range(n)]
    C = FinHopf(basis, mult, comult, counit, Matrix.identity(N), unit=unit, name=name)
    D = DoubleAlg(C, K, Matrix.zeros(N, n), Matrix.zeros(N, n))
    # antipode: S(f (x) a) = (eps (x) S(a)) (S*^{-1}... ) with the K*^cop antipode
    # e^p -> e^p o S^{-1}
    Si = Sinv.data
    Sm = Matrix.zeros(N, N)
    for p in range(n):
        fS = {i: Si[p][i] for i in range(n) if Si[p][i]}
        right = D.left(fS)
        for a in range(n):
            left = D.right(K.Scols[a])
            img = C.mul(left, right)
            col = p * n + a
            for r, c in img.items():
                Sm.data[r][col] = c
    C.antipode = Sm
    C._Scols = None
    D.left_factor = map_matrix_from_images([D.left({p: ONE}) for p in range(n)], N)
    D.right_factor = map_matrix_from_images([D.right({a: ONE}) for a in range(n)], N)
    return D


def double_of_H(x_scale=SQRT2) -> DoubleAlg:
    """D(H^cop) with generators g, h, x (through psi) and a, b, c, d."""
    from .presets import H_alg, A_alg, psi_generator_images, psi_matrix
    H = H_alg()
    K = cop(H, name="H^cop")
    D = drinfeld_double(K, name="D")
    gens = psi_generator_images(x_scale)
    for g in ("g", "h", "x"):
        D.generators[g] = D.left(gens[g])
    for g in ("a", "b", "c", "d"):
        D.generators[g] = D.right(H.generators[g])
    D.A = A_alg()
    D.x_scale = fe(x_scale)
    D.psi = psi_matrix(x_scale)
    # left-factor words: the A-normal words read as D-products.  Their images
    # span the 16-dim left factor; invert to express each e^p (x) 1.
    n = K.dim
    words = list(D.A.words)
    M = Matrix.zeros(n, n)
    u = next(iter(K.unit))
    for col, word in enumerate(words):
        v = D_word(D, word)
        for idx, c in v.items():
            p, a = divmod(idx, n)
            if a != u:
                raise AssertionError("left-factor word left the left factor")
            M.data[p][col] = c
    D.left_words = words
    D.left_word_inverse = inverse(M)   # column p: coefficients of words giving e^p (x) 1
    Winv = D.left_word_inverse.data
    gen_words = {}
    for p in range(n):
        for a in range(n):
            comb = {}
            for wi, word in enumerate(words):
                c = Winv[wi][p]
                if c:
                    add_term(comb, tuple(word) + tuple(H.words[a]), c)
            gen_words[p * n + a] = comb
    D.carrier.generators = dict(D.generators)
    D.carrier.gen_words = gen_words
    D.carrier.relations = all_relations()
    return D


def check_basis_words(D: DoubleAlg) -> bool:
    """Every carrier basis element equals its recorded generator-word expression."""
    n = D.K.dim
    left = [D_word(D, w) for w in D.left_words]
    Winv = D.left_word_inverse.data
    for p in range(n):
        lp = {}
        for wi in range(n):
            if Winv[wi][p]:
                add_into(lp, left[wi], Winv[wi][p])
        for a in range(n):
            v = D.carrier.mul(lp, D.right({a: ONE}))
            if v != {p * n + a: ONE}:
                return False
    return True


# relations as lists of (coefficient, word); each list must evaluate to zero
_R2 = SQRT2
PROP_RELATIONS = {
    "ag=ga": [(1, "ag"), (-1, "ga")],
    "ah=ha": [(1, "ah"), (-1, "ha")],
    "dg=gd": [(1, "dg"), (-1, "gd")],
    "dh=hd": [(1, "dh"), (-1, "hd")],
    "bg=gb": [(1, "bg"), (-1, "gb")],
    "bh=-hb": [(1, "bh"), (1, "hb")],
    "cg=gc": [(1, "cg"), (-1, "gc")],
    "ch=-hc": [(1, "ch"), (1, "hc")],
    "ax+xi*xa=sqrt2*xi(c-ghb)": [(1, "ax"), (XI, "xa"), (-_R2 * XI, "c"), (_R2 * XI, "ghb")],
    "dx-xi*xd=sqrt2*xi(ghc-b)": [(1, "dx"), (-XI, "xd"), (-_R2 * XI, "ghc"), (_R2 * XI, "b")],
    "bx+xi*xb=sqrt2*xi(d-gha)": [(1, "bx"), (XI, "xb"), (-_R2 * XI, "d"), (_R2 * XI, "gha")],
    "cx-xi*xc=sqrt2*xi(ghd-a)": [(1, "cx"), (-XI, "xc"), (-_R2 * XI, "ghd"), (_R2 * XI, "a")],
}

A_BOP_RELATIONS = {
    "g^4=1": [(1, "gggg"), (-1, "")],
    "h^2=1": [(1, "hh"), (-1, "")],
    "hg=gh": [(1, "hg"), (-1, "gh")],
    "hx=-xh": [(1, "hx"), (1, "xh")],
    "gx=xg": [(1, "gx"), (-1, "xg")],
    "x^2=1-g^2": [(1, "xx"), (-1, ""), (1, "gg")],
}

XI3 = -XI
H_RELATIONS = {
    "ab=xi*ba": [(1, "ab"), (-XI, "ba")],
    "ac=xi*ca": [(1, "ac"), (-XI, "ca")],
    "bd=xi*db": [(1, "bd"), (-XI, "db")],
    "cd=xi*dc": [(1, "cd"), (-XI, "dc")],
    "bc=0": [(1, "bc")], "cb=0": [(1, "cb")],
    "b^2=0": [(1, "bb")], "c^2=0": [(1, "cc")],
    "ad=da": [(1, "ad"), (-1, "da")],
    "a^2=d^2": [(1, "aa"), (-1, "dd")],
    "a^4=1": [(1, "aaaa"), (-1, "")],
    "bd=ca": [(1, "bd"), (-1, "ca")],
    "cd=ba": [(1, "cd"), (-1, "ba")],
}


def all_relations() -> dict:
    out = {}
    for rels in (H_RELATIONS, A_BOP_RELATIONS, PROP_RELATIONS):
        out.update(rels)
    return out


def eval_relation(D: DoubleAlg, terms) -> dict:
    out = {}
    for c, word in terms:
        add_into(out, D_word(D, tuple(word)), fe(c))
    return out


def verify_presentation(D: DoubleAlg) -> Report:
    rep = Report("presentation of the double")
    for group, rels in (("H^cop", H_RELATIONS), ("A^bop", A_BOP_RELATIONS), ("cross", PROP_RELATIONS)):
        for name, terms in rels.items():
            v = eval_relation(D, terms)
            rep.add(f"{group}: {name}", not v, "" if not v else f"residual with {len(v)} terms")
    rep.add("basis spanned by generator words", check_basis_words(D))
    # embeddings are Hopf algebra maps
    if D.A is not None and D.psi is not None:
        Abop = bop(D.A, name="A^bop")
        images = []
        for j in range(D.A.dim):
            col = {i: D.psi.data[i][j] for i in range(D.psi.rows) if D.psi.data[i][j]}
            images.append(D.left(col))
        F = map_matrix_from_images(images, D.dim)
        r = hopf_morphism_check(F, Abop, D.carrier)
        rep.add("A^bop -> D is an injective Hopf map", r.ok, "; ".join(f"{c.name}={c.status}" for c in r.checks))
    r = hopf_morphism_check(D.right_factor, D.K, D.carrier)
    rep.add("H^cop -> D is an injective Hopf map", r.ok, "; ".join(f"{c.name}={c.status}" for c in r.checks))
    return rep.finish()


_DOUBLE_CACHE: dict = {}


def the_double() -> DoubleAlg:
    """Cached D(H^cop) with the standard sqrt(2) normalisation of psi."""
    if "D" not in _DOUBLE_CACHE:
        _DOUBLE_CACHE["D"] = double_of_H()
    return _DOUBLE_CACHE["D"]
