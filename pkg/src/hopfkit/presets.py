"""The concrete Hopf algebras: H, the pointed algebra A, its graded version G,
the dual H* and the isomorphism psi: A -> H*."""
from __future__ import annotations

from functools import lru_cache

from .hopf import (FinHopf, Presentation, build_from_presentation, dual_hopf,
                   map_matrix_from_images)
from .rewriting import combo
from .scalar import ONE, XI, SQRT2, ZERO, fe, xi_pow
from .sparse import add_into, add_term

XI3 = -XI


def H_presentation() -> Presentation:
    rules = {
        "ab": combo((XI, "ba")), "ac": combo((XI, "ca")), "ad": combo((1, "da")),
        "cd": combo((1, "ba")), "bd": combo((1, "ca")),
        "db": combo((XI3, "ca")), "dc": combo((XI3, "ba")),
        "dd": combo((1, "aa")), "bb": {}, "cc": {}, "bc": {}, "cb": {},
        "aaaa": combo((1, "")),
    }
    comult = {
        "a": {("a", "a"): ONE, ("b", "c"): ONE},
        "b": {("a", "b"): ONE, ("b", "d"): ONE},
        "c": {("c", "a"): ONE, ("d", "c"): ONE},
        "d": {("d", "d"): ONE, ("c", "b"): ONE},
    }
    counit = {"a": ONE, "b": ZERO, "c": ZERO, "d": ONE}
    antipode = {
        "a": combo((1, "aaa")), "d": combo((1, "ddd")),
        "b": combo((XI, "caa")), "c": combo((XI3, "baa")),
    }
    order = ["", "a", "aa", "aaa", "d", "da", "daa", "daaa",
             "b", "c", "ba", "ca", "baa", "caa", "baaa", "caaa"]
    return Presentation(["a", "b", "c", "d"], rules, comult, counit, antipode,
                        basis_order=[tuple(x) for x in order], name="H")


def _A_like(nilpotent: bool, name: str) -> Presentation:
    rules = {
        "xg": combo((1, "gx")), "xh": combo((-1, "hx")), "hg": combo((1, "gh")),
        "gggg": combo((1, "")), "hh": combo((1, "")),
        "xx": {} if nilpotent else combo((1, ""), (-1, "gg")),
    }
    comult = {
        "g": {("g", "g"): ONE}, "h": {("h", "h"): ONE},
        "x": {("x", ""): ONE, ("gh", "x"): ONE},
    }
    counit = {"g": ONE, "h": ONE, "x": ZERO}
    # S(x) = -(gh)^{-1} x = -g^3 h x
    antipode = {"g": combo((1, "ggg")), "h": combo((1, "h")), "x": combo((-1, "ggghx"))}
    order = []
    for part in ("", "h", "x", "hx"):
        for j in range(4):
            order.append(tuple("g" * j + part))
    return Presentation(["g", "h", "x"], rules, comult, counit, antipode,
                        basis_order=order, name=name)


def A_presentation() -> Presentation:
    return _A_like(False, "A")


def G_presentation() -> Presentation:
    return _A_like(True, "G")


@lru_cache(maxsize=None)
def H_alg() -> FinHopf:
    return build_from_presentation(H_presentation())


@lru_cache(maxsize=None)
def A_alg() -> FinHopf:
    return build_from_presentation(A_presentation())


@lru_cache(maxsize=None)
def G_alg() -> FinHopf:
    return build_from_presentation(G_presentation())


@lru_cache(maxsize=None)
def Hdual() -> FinHopf:
    return dual_hopf(H_alg(), name="H*")


def H_word_index():
    """Map (prefix in {1,d,b,c}, power of a) -> basis index of H."""
    H = H_alg()
    out = {}
    for p in ("", "d", "b", "c"):
        for i in range(4):
            out[(p, i)] = H.index(tuple(p + "a" * i))
    return out


def psi_generator_images(x_scale=SQRT2):
    """psi(g), psi(h), psi(x) as functionals on H, i.e. sparse vectors in the
    dual basis.  x_scale multiplies the functional sum (ba^i)* + (ca^i)*."""
    idx = H_word_index()
    g, h, x = {}, {}, {}
    for i in range(4):
        g[idx[("", i)]] = xi_pow(i)
        g[idx[("d", i)]] = xi_pow(i + 1)
        h[idx[("", i)]] = ONE
        h[idx[("d", i)]] = -ONE
        x[idx[("b", i)]] = fe(x_scale)
        x[idx[("c", i)]] = fe(x_scale)
    return {"g": g, "h": h, "x": x}


def psi_matrix(x_scale=SQRT2, target: FinHopf | None = None):
    """Matrix of psi: A -> H* (columns indexed by the basis of A)."""
    A = A_alg()
    D = target or Hdual()
    gens = psi_generator_images(x_scale)
    images = []
    for word in A.words:
        v = D.unit
        for letter in word:
            v = D.mul(v, gens[letter])
        images.append(v)
    return map_matrix_from_images(images, D.dim)


def psi_closed_form(label: str) -> dict:
    """Closed-form images of the basis of A under psi, written out explicitly."""
    idx = H_word_index()
    out: dict = {}
    A = A_alg()
    word = A.words[A.index(label)]
    j = word.count("g")
    hh = "h" in word
    xx = "x" in word
    sign_d = -1 if hh else 1
    for i in range(4):
        if not xx:
            add_term(out, idx[("", i)], xi_pow(i * j))
            add_term(out, idx[("d", i)], fe(sign_d) * xi_pow((i + 1) * j))
        else:
            add_term(out, idx[("b", i)], SQRT2 * xi_pow((i + 1) * j))
            add_term(out, idx[("c", i)], fe(sign_d) * SQRT2 * xi_pow((i + 1) * j))
    return out


def h_vec(label) -> dict:
    return H_alg().e(label)


def H_elem(*terms) -> dict:
    """H_elem((c, 'ba'), (c2, 'd')) as a sparse vector in H."""
    H = H_alg()
    out = {}
    for c, lab in terms:
        add_into(out, H.word(tuple(lab)), fe(c))
    return out
