"""Finite-dimensional Hopf algebras given by structure constants.

A FinHopf stores, on a fixed basis e_0..e_{n-1}:
  mult[i][j]   sparse dict k -> c with e_i e_j = sum c e_k
  comult[i]    list of (j, k, c) with Delta(e_i) = sum c e_j (x) e_k
  counit[i]    epsilon(e_i)
  antipode     Matrix whose column j is S(e_j)
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .linalg import Matrix, inverse, rank, kernel_basis, rref
from .report import Report, PASS
from .rewriting import RewriteSystem, NotClosed, NonTerminating, w
from .scalar import FieldElement, ONE, ZERO, fe
from .sparse import add_into, add_term, sub, from_dense

__all__ = [
    "FinHopf", "Presentation", "build_from_presentation", "verify_hopf_axioms",
    "dual_hopf", "cop", "op", "bop", "hopf_morphism_check", "grouplikes",
    "skew_primitives", "coradical", "NotGrouplike", "tensor_mul", "group_algebra",
    "NonTerminating", "NotClosed", "map_matrix_from_images", "radical_dim",
    "trace_form_gram", "dual_trace_gram", "is_grouplike", "roots_in_K", "sqrt_in_K",
    "antipode_check_values",
]


class NotGrouplike(ValueError):
    pass


class FinHopf:
    def __init__(self, basis, mult, comult, counit, antipode, unit=None, name="",
                 generators=None, gen_words=None, rewriter=None, words=None):
        self.name = name
        self.basis = list(basis)
        self.dim = len(self.basis)
        self.mult = mult
        self.comult = comult
        self.counit = [fe(c) for c in counit]
        self.antipode = antipode
        # generators: name -> sparse vector; gen_words[i] expresses e_i as
        # a combination of generator words (proof that the generators generate)
        self.generators = dict(generators or {})
        self.gen_words = gen_words
        self.rewriter = rewriter
        self.words = words
        self._index = {lab: i for i, lab in enumerate(self.basis)}
        self._Scols = None
        self._Sinv = None
        self.unit = unit if unit is not None else self._find_unit()

    # ---- basic access ----------------------------------------------------
    def index(self, label) -> int:
        if isinstance(label, tuple):
            if self.words is not None:
                if not hasattr(self, "_windex"):
                    self._windex = {x: i for i, x in enumerate(self.words)}
                return self._windex[label]
            label = "".join(label) or "1"
        if label == "" and "1" in self._index:
            label = "1"
        return self._index[label]

    def e(self, label) -> dict:
        if isinstance(label, int):
            return {label: ONE}
        return {self.index(label): ONE}

    def _find_unit(self):
        n = self.dim
        for i in range(n):
            if all(self.mult[i][j] == {j: ONE} and self.mult[j][i] == {j: ONE} for j in range(n)):
                return {i: ONE}
        # general case: solve u e_j = e_j for all j
        rows, rhs = [], []
        for j in range(n):
            for k in range(n):
                rows.append([self.mult[i][j].get(k, ZERO) for i in range(n)])
                rhs.append(ONE if k == j else ZERO)
        from .linalg import solve
        u = solve(rows, rhs)
        if u is None:
            raise ValueError("algebra has no unit")
        return from_dense(u)

    @property
    def Scols(self):
        if self._Scols is None:
            A = self.antipode.data
            self._Scols = [{i: A[i][j] for i in range(self.dim) if A[i][j]} for j in range(self.dim)]
        return self._Scols

    @property
    def Sinv(self) -> Matrix:
        if self._Sinv is None:
            self._Sinv = inverse(self.antipode)
        return self._Sinv

    # ---- operations on sparse vectors -------------------------------------
    def mul(self, u: dict, v: dict) -> dict:
        out = {}
        mult = self.mult
        for i, a in u.items():
            row = mult[i]
            for j, b in v.items():
                add_into(out, row[j], a * b)
        return out

    def mul_many(self, *vs) -> dict:
        out = self.unit
        for v in vs:
            out = self.mul(out, v)
        return out

    def delta(self, u: dict) -> dict:
        out = {}
        for i, a in u.items():
            for j, k, c in self.comult[i]:
                add_term(out, (j, k), a * c)
        return out

    def eps(self, u: dict) -> FieldElement:
        s = ZERO
        for i, a in u.items():
            c = self.counit[i]
            if c:
                s = s + a * c
        return s

    def S(self, u: dict) -> dict:
        out = {}
        cols = self.Scols
        for i, a in u.items():
            add_into(out, cols[i], a)
        return out

    def Sinv_vec(self, u: dict) -> dict:
        M = self.Sinv.data
        out = {}
        for i, a in u.items():
            for r in range(self.dim):
                if M[r][i]:
                    add_term(out, r, a * M[r][i])
        return out

    def word(self, letters) -> dict:
        """Product of named generators, left to right."""
        out = self.unit
        for g in letters:
            out = self.mul(out, self.generators[g])
        return out

    def label(self, u: dict) -> str:
        if not u:
            return "0"
        parts = []
        for i in sorted(u):
            c = u[i]
            parts.append(f"({c})*{self.basis[i]}" if c != ONE else self.basis[i])
        return " + ".join(parts)

    def left_mult_matrix(self, i) -> list:
        n = self.dim
        M = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            for k, c in self.mult[i][j].items():
                M[k][j] = c
        return M

    def __repr__(self):
        return f"FinHopf({self.name or '?'}, dim={self.dim})"


def tensor_mul(A: FinHopf, s: dict, t: dict, B: FinHopf | None = None) -> dict:
    """Product in A (x) B of sparse tensors keyed by (j, k)."""
    B = B or A
    out = {}
    ma, mb = A.mult, B.mult
    for (i1, j1), a in s.items():
        ra, rb = ma[i1], mb[j1]
        for (i2, j2), b in t.items():
            c = a * b
            for k1, x in ra[i2].items():
                cx = c * x
                for k2, y in rb[j2].items():
                    add_term(out, (k1, k2), cx * y)
    return out


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

@dataclass
class Presentation:
    """Generators, oriented rewrite rules and coalgebra data on generators.

    rules:     lhs word -> {word: coeff}
    comult:    generator -> {(word, word): coeff}
    counit:    generator -> scalar
    antipode:  generator -> {word: coeff}
    relations: extra (lhs combo, rhs combo) pairs checked as identities
    """
    generators: list
    rules: dict
    comult: dict
    counit: dict
    antipode: dict
    basis_order: list | None = None
    relations: list = field(default_factory=list)
    normal_form_bound: int = 4096
    max_steps: int = 2_000_000
    name: str = ""


def _label(word) -> str:
    if not word:
        return "1"
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        g = str(word[i])
        out.append(g if j - i == 1 else f"{g}^{j - i}")
        i = j
    return "".join(out)


def build_from_presentation(p: Presentation, strict: bool = False) -> FinHopf:
    rw = RewriteSystem(p.generators, p.rules, p.max_steps)
    words = rw.normal_words(p.normal_form_bound)
    if p.basis_order is not None:
        order = [w(x) if not isinstance(x, tuple) else x for x in p.basis_order]
        if set(order) != set(words) or len(order) != len(words):
            missing = set(words) - set(order)
            extra = set(order) - set(words)
            raise ValueError(f"basis_order mismatch: missing {sorted(missing)[:5]}, extra {sorted(extra)[:5]}")
        words = order
    else:
        gi = {g: i for i, g in enumerate(p.generators)}
        words.sort(key=lambda x: (len(x), [gi[g] for g in x]))
    idx = {x: i for i, x in enumerate(words)}
    n = len(words)

    def to_idx(comb):
        out = {}
        for word, c in comb.items():
            if word not in idx:
                raise NotClosed(f"word {word} outside the normal basis")
            add_term(out, idx[word], c)
        return out

    mult = [[to_idx(rw.nf(words[i] + words[j])) for j in range(n)] for i in range(n)]
    unit = {idx[()]: ONE}

    def nf_vec(comb):
        return to_idx(rw.nf_combo(comb))

    gen_vec = {g: nf_vec({(g,): ONE}) for g in p.generators}

    # Delta on generators as sparse tensors
    gen_delta = {}
    for g in p.generators:
        t = {}
        for (w1, w2), c in p.comult[g].items():
            v1 = nf_vec({w(w1): ONE})
            v2 = nf_vec({w(w2): ONE})
            for i1, a in v1.items():
                for i2, b in v2.items():
                    add_term(t, (i1, i2), fe(c) * a * b)
        gen_delta[g] = t

    tmp = FinHopf(["?"] * n, mult, [[]] * n, [ZERO] * n, Matrix.identity(n), unit=unit)

    # multiplicative extension along normal words (prefixes are normal too)
    delta_of = {(): {(idx[()], idx[()]): ONE}}
    eps_of = {(): ONE}
    S_of = {(): unit}
    gen_S = {g: nf_vec({w(k): fe(c) for k, c in p.antipode[g].items()}) for g in p.generators}
    for word in sorted(words, key=len):
        if word in delta_of:
            continue
        pre, g = word[:-1], word[-1]
        delta_of[word] = tensor_mul(tmp, delta_of[pre], gen_delta[g])
        eps_of[word] = eps_of[pre] * fe(p.counit[g])
        S_of[word] = tmp.mul(gen_S[g], S_of[pre])

    comult = [[(j, k, c) for (j, k), c in sorted(delta_of[x].items())] for x in words]
    counit = [eps_of[x] for x in words]
    Sm = Matrix.zeros(n, n)
    for j, x in enumerate(words):
        for i, c in S_of[x].items():
            Sm.data[i][j] = c

    if strict:
        # Delta has to respect every rule for the extension to be well defined
        def delta_word(word):
            t = {(idx[()], idx[()]): ONE}
            for g in word:
                t = tensor_mul(tmp, t, gen_delta[g])
            return t
        for lhs, rhs in rw.rules.items():
            lt = delta_word(lhs)
            rt = {}
            for word, c in rhs.items():
                add_into(rt, delta_word(word), c)
            if sub(lt, rt):
                raise NotClosed(f"comultiplication does not respect {_label(lhs)}")

    gen_words = {i: {x: ONE} for i, x in enumerate(words)}
    return FinHopf([_label(x) for x in words], mult, comult, counit, Sm, unit=unit,
                   name=p.name, generators=gen_vec, gen_words=gen_words, rewriter=rw,
                   words=words)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _first_bad(items, limit=3):
    return ", ".join(items[:limit]) + (" ..." if len(items) > limit else "")


def verify_hopf_axioms(H: FinHopf, mode: str = "auto", spot: int = 0, seed: int = 0,
                       full_threshold: int = 32) -> Report:
    """Check every Hopf algebra axiom on the stored structure constants.

    mode 'full' runs associativity on all basis triples and multiplicativity
    of Delta and epsilon on all pairs.  mode 'generators' restricts the
    middle (resp. left) factor to algebra generators, which is equivalent
    once the generators are known to span the algebra by products; it needs
    H.generators and H.gen_words.  'auto' picks full for dim <= full_threshold.
    """
    rep = Report(f"hopf axioms ({H.name or 'dim ' + str(H.dim)})")
    n = H.dim
    basis = list(range(n))
    if mode == "auto":
        mode = "full" if (n <= full_threshold or not H.generators) else "generators"
    gens = list(H.generators.items()) if mode == "generators" else [(H.basis[i], {i: ONE}) for i in basis]
    if mode == "generators" and not H.generators:
        raise ValueError("generator mode needs generators")
    mult = H.mult
    rep.add("mode", PASS, f"{mode}; {len(gens)} middle elements")

    def right_mul_basis(v: dict, wi: int) -> dict:
        out = {}
        for k, c in v.items():
            add_into(out, mult[k][wi], c)
        return out

    def left_mul_basis(ui: int, v: dict) -> dict:
        out = {}
        row = mult[ui]
        for k, c in v.items():
            add_into(out, row[k], c)
        return out

    # associativity (u v) w = u (v w)
    bad = []
    for gname, v in gens:
        uv = [H.mul({u: ONE}, v) for u in basis]
        vw = [H.mul(v, {x: ONE}) for x in basis]
        for u in basis:
            for x in basis:
                if right_mul_basis(uv[u], x) != left_mul_basis(u, vw[x]):
                    bad.append(f"({H.basis[u]},{gname},{H.basis[x]})")
    rep.add("associativity", not bad, _first_bad(bad) if bad else f"{len(gens)}x{n}x{n} triples")
    if spot:
        rng = random.Random(seed)
        badspot = 0
        for _ in range(spot):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if right_mul_basis(mult[a][b], c) != left_mul_basis(a, mult[b][c]):
                badspot += 1
        rep.add("associativity spot check", badspot == 0, f"{spot} random triples, {badspot} bad")

    # unit
    u = H.unit
    bad = [H.basis[i] for i in basis if H.mul(u, {i: ONE}) != {i: ONE} or H.mul({i: ONE}, u) != {i: ONE}]
    rep.add("unit", not bad, _first_bad(bad))

    # counit
    bad = []
    for i in basis:
        left, right = {}, {}
        for j, k, c in H.comult[i]:
            e1, e2 = H.counit[j], H.counit[k]
            if e1:
                add_term(left, k, c * e1)
            if e2:
                add_term(right, j, c * e2)
        if left != {i: ONE} or right != {i: ONE}:
            bad.append(H.basis[i])
    rep.add("counit", not bad, _first_bad(bad))

    # coassociativity: on all basis elements (cheap enough) unless dimension is large
    # and Delta is multiplicative, in which case generators suffice
    co_elems = [(H.basis[i], {i: ONE}) for i in basis] if mode == "full" else gens
    bad = []
    for name, v in co_elems:
        d = H.delta(v)
        lhs, rhs = {}, {}
        for (j, k), c in d.items():
            for j1, j2, c1 in H.comult[j]:
                add_term(lhs, (j1, j2, k), c * c1)
            for k1, k2, c2 in H.comult[k]:
                add_term(rhs, (j, k1, k2), c * c2)
        if lhs != rhs:
            bad.append(name)
    rep.add("coassociativity", not bad, _first_bad(bad) if bad else f"{len(co_elems)} elements")

    # Delta algebra map
    bad = []
    one = H.unit
    d1 = H.delta(one)
    one_one = {}
    for i, a in one.items():
        for j, b in one.items():
            add_term(one_one, (i, j), a * b)
    if d1 != one_one:
        bad.append("Delta(1)")
    deltas = [H.delta({i: ONE}) for i in basis]
    for gname, v in gens:
        dv = H.delta(v)
        for x in basis:
            lhs = H.delta(H.mul(v, {x: ONE}))
            rhs = tensor_mul(H, dv, deltas[x])
            if lhs != rhs:
                bad.append(f"({gname},{H.basis[x]})")
    rep.add("comultiplication is an algebra map", not bad, _first_bad(bad))

    # epsilon algebra map
    bad = []
    if H.eps(one) != ONE:
        bad.append("eps(1)")
    for gname, v in gens:
        ev = H.eps(v)
        for x in basis:
            if H.eps(H.mul(v, {x: ONE})) != ev * H.counit[x]:
                bad.append(f"({gname},{H.basis[x]})")
    rep.add("counit is an algebra map", not bad, _first_bad(bad))

    # antipode on every basis element
    bad = []
    Sc = H.Scols
    for i in basis:
        left, right = {}, {}
        for j, k, c in H.comult[i]:
            for s, cs in Sc[j].items():
                add_into(left, mult[s][k], c * cs)
            for s, cs in Sc[k].items():
                add_into(right, mult[j][s], c * cs)
        target = {k: v * H.counit[i] for k, v in one.items()} if H.counit[i] else {}
        if left != target or right != target:
            bad.append(H.basis[i])
    rep.add("antipode", not bad, _first_bad(bad))

    if mode == "generators":
        ok = H.gen_words is not None and len(H.gen_words) == n
        rep.add("generators span", ok, "basis expressed through generator words" if ok else "missing proof of generation")
    return rep.finish()


def antipode_check_values(H: FinHopf, expected: dict) -> Report:
    """Compare S on named elements with expected sparse vectors."""
    rep = Report("antipode values")
    for name, (vec, target) in expected.items():
        got = H.S(vec)
        rep.add(f"S({name})", got == target, "" if got == target else f"got {H.label(got)}")
    return rep.finish()


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def dual_hopf(H: FinHopf, name=None) -> FinHopf:
    n = H.dim
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for i, j, c in H.comult[k]:
            add_term(mult[i][j], k, c)
    comult = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in H.mult[i][j].items():
                comult[k].append((i, j, c))
    for k in range(n):
        comult[k].sort(key=lambda t: (t[0], t[1]))
    counit = [H.unit.get(i, ZERO) for i in range(n)]
    unit = {i: c for i, c in enumerate(H.counit) if c}
    D = FinHopf([f"({b})*" for b in H.basis], mult, comult, counit, H.antipode.transpose(),
                unit=unit, name=name or f"{H.name}*")
    D.predual = H
    return D


def cop(H: FinHopf, name=None) -> FinHopf:
    comult = [[(k, j, c) for (j, k, c) in row] for row in H.comult]
    R = FinHopf(H.basis, H.mult, comult, H.counit, H.Sinv, unit=H.unit,
                name=name or f"{H.name}^cop", generators=H.generators, gen_words=H.gen_words,
                rewriter=H.rewriter, words=H.words)
    R._Sinv = H.antipode
    return R


def op(H: FinHopf, name=None) -> FinHopf:
    n = H.dim
    mult = [[H.mult[j][i] for j in range(n)] for i in range(n)]
    R = FinHopf(H.basis, mult, H.comult, H.counit, H.Sinv, unit=H.unit,
                name=name or f"{H.name}^op", generators=H.generators)
    R._Sinv = H.antipode
    return R


def bop(H: FinHopf, name=None) -> FinHopf:
    n = H.dim
    mult = [[H.mult[j][i] for j in range(n)] for i in range(n)]
    comult = [[(k, j, c) for (j, k, c) in row] for row in H.comult]
    return FinHopf(H.basis, mult, comult, H.counit, H.antipode, unit=H.unit,
                   name=name or f"{H.name}^bop", generators=H.generators)


def group_algebra(n: int) -> FinHopf:
    """k[Z_n] on basis g^0..g^{n-1}."""
    mult = [[{(i + j) % n: ONE} for j in range(n)] for i in range(n)]
    comult = [[(i, i, ONE)] for i in range(n)]
    Sm = Matrix.zeros(n, n)
    for i in range(n):
        Sm.data[(-i) % n][i] = ONE
    return FinHopf([f"g^{i}" if i else "1" for i in range(n)], mult, comult, [ONE] * n, Sm,
                   unit={0: ONE}, name=f"k[Z{n}]", generators={"g": {1 % n: ONE}},
                   gen_words={i: {("g",) * i: ONE} for i in range(n)})


def map_matrix_from_images(images: list, dst_dim: int) -> Matrix:
    """Matrix whose column j is the sparse vector images[j]."""
    M = Matrix.zeros(dst_dim, len(images))
    for j, v in enumerate(images):
        for i, c in v.items():
            M.data[i][j] = c
    return M


def hopf_morphism_check(f: Matrix, src: FinHopf, dst: FinHopf) -> Report:
    rep = Report(f"Hopf morphism {src.name} -> {dst.name}")
    n = src.dim
    cols = [{i: f.data[i][j] for i in range(f.rows) if f.data[i][j]} for j in range(n)]

    def F(v: dict) -> dict:
        out = {}
        for j, c in v.items():
            add_into(out, cols[j], c)
        return out

    bad = []
    for i in range(n):
        for j in range(n):
            if F(src.mult[i][j]) != dst.mul(cols[i], cols[j]):
                bad.append(f"({src.basis[i]},{src.basis[j]})")
    rep.add("multiplicative", not bad, _first_bad(bad))
    rep.add("unital", F(src.unit) == dst.unit)
    bad = []
    for i in range(n):
        lhs = {}
        for j, k, c in src.comult[i]:
            for a, x in cols[j].items():
                for b, y in cols[k].items():
                    add_term(lhs, (a, b), c * x * y)
        if lhs != dst.delta(cols[i]):
            bad.append(src.basis[i])
    rep.add("comultiplicative", not bad, _first_bad(bad))
    bad = [src.basis[i] for i in range(n) if dst.eps(cols[i]) != src.counit[i]]
    rep.add("counital", not bad, _first_bad(bad))
    bad = [src.basis[i] for i in range(n) if F(src.Scols[i]) != dst.S(cols[i])]
    rep.add("commutes with antipode", not bad, _first_bad(bad))
    r = rank(f)
    rep.add("rank", PASS, f"rank {r}", data=r)
    if n == dst.dim:
        rep.add("bijective", r == n, f"rank {r}, dims {n}->{dst.dim}")
    else:
        rep.add("injective", r == n, f"rank {r}, dims {n}->{dst.dim}")
    return rep.finish()


# ---------------------------------------------------------------------------
# coradical, grouplikes, skew-primitives
# ---------------------------------------------------------------------------

def dual_trace_gram(H: FinHopf) -> list:
    """Gram matrix of the trace form of the dual algebra, in the dual basis."""
    n = H.dim
    # tau*(f_l) = trace of left multiplication by f_l on H* = sum_m [e_l (x) e_m] Delta(e_m)
    tau = [ZERO] * n
    for m in range(n):
        for j, k, c in H.comult[m]:
            if k == m:
                tau[j] = tau[j] + c
    G = [[ZERO] * n for _ in range(n)]
    for l in range(n):
        t = tau[l]
        if not t:
            continue
        for i, j, c in H.comult[l]:
            G[i][j] = G[i][j] + c * t
    return G


def coradical(H: FinHopf) -> list:
    """Basis (dense vectors) of H_0 = J(H*)^perp, via the dual trace form."""
    G = dual_trace_gram(H)
    R, _ = rref(G)
    return R


def trace_form_gram(A: FinHopf) -> list:
    n = A.dim
    tau = [ZERO] * n
    for k in range(n):
        s = ZERO
        for j in range(n):
            c = A.mult[k][j].get(j)
            if c:
                s = s + c
        tau[k] = s
    G = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        row = A.mult[i]
        for j in range(n):
            s = ZERO
            for k, c in row[j].items():
                if tau[k]:
                    s = s + c * tau[k]
            G[i][j] = s
    return G


def radical_dim(A: FinHopf) -> int:
    """dim J(A) as the kernel of the trace form tr(L_x L_y) (characteristic 0)."""
    return A.dim - rank(trace_form_gram(A))


def is_grouplike(H: FinHopf, g: dict) -> bool:
    if not g or H.eps(g) != ONE:
        return False
    gg = {}
    for i, a in g.items():
        for j, b in g.items():
            add_term(gg, (i, j), a * b)
    return H.delta(g) == gg


def _grouplikes_scan(H: FinHopf, max_support=2) -> list:
    """Grouplikes supported on at most two basis elements."""
    n = H.dim
    found = []
    # support 1: Delta(e_i) = e_i (x) e_i and eps = 1 (up to the scalar fixed by eps)
    for i in range(n):
        ei = H.counit[i]
        if not ei:
            continue
        g = {i: ONE / ei}
        if is_grouplike(H, g):
            found.append(g)
    if max_support >= 2:
        # support {i, j}: g = s e_i + t e_j; Delta(g) = g (x) g forces the
        # diagonal coefficients: s = [e_i(x)e_i]Delta(g) / s etc.  Solve via the
        # linear section where coefficient of e_i (x) e_i gives s^2 = s*a + t*b.
        for i in range(n):
            for j in range(i + 1, n):
                cand = _solve_support2(H, i, j)
                for g in cand:
                    if is_grouplike(H, g) and g not in found:
                        found.append(g)
    return found


def _solve_support2(H, i, j):
    # unknowns s, t (both nonzero).  The coefficient of e_i (x) e_j in Delta(g)
    # must be s*t, a bilinear equation; equivalently for e_i (x) e_i:
    #   s^2 = s*A + t*B   with A = [e_i(x)e_i]Delta(e_i), B = [e_i(x)e_i]Delta(e_j)
    # and likewise for (j, j).  Together with eps(g) = 1 (linear), eliminate.
    ci = dict(((a, b), c) for a, b, c in H.comult[i])
    cj = dict(((a, b), c) for a, b, c in H.comult[j])
    ei, ej = H.counit[i], H.counit[j]
    A1, B1 = ci.get((i, i), ZERO), cj.get((i, i), ZERO)
    A2, B2 = ci.get((j, j), ZERO), cj.get((j, j), ZERO)
    C1, D1 = ci.get((i, j), ZERO), cj.get((i, j), ZERO)
    out = []
    # s t = s*C1 + t*D1 and s^2 = s*A1 + t*B1.  From eps: s ei + t ej = 1.
    # Parametrise along the eps line and solve the resulting quadratic in s.
    if ej:
        # t = (1 - s ei)/ej
        # s^2 = s A1 + (1 - s ei) B1/ej  -> s^2 - s (A1 - ei B1/ej) - B1/ej = 0
        p1 = A1 - ei * B1 / ej
        q1 = B1 / ej
        for s in _quad_roots(ONE, -p1, -q1):
            t = (ONE - s * ei) / ej
            if s and t:
                out.append({i: s, j: t})
    elif ei:
        s = ONE / ei
        # s^2 = s A1 + t B1
        if B1:
            t = (s * s - s * A1) / B1
            if t:
                out.append({i: s, j: t})
        else:
            # use the (i, j) coefficient: s t = s C1 + t D1
            den = s - D1
            if den:
                t = s * C1 / den
                if t:
                    out.append({i: s, j: t})
    del A2, B2
    return out


def _quad_roots(a, b, c):
    """Roots in K of a x^2 + b x + c."""
    if not a:
        if not b:
            return []
        return [-c / b]
    disc = b * b - 4 * a * c
    r = sqrt_in_K(disc)
    if r is None:
        return []
    if not r:
        return [-b / (2 * a)]
    return [(-b + r) / (2 * a), (-b - r) / (2 * a)]


def sqrt_in_K(x: FieldElement):
    if not x:
        return ZERO
    roots = roots_in_K([-x, ZERO, ONE])
    return roots[0] if roots else None


_SYMPY_CACHE = {}


def _sympy_field():
    if not _SYMPY_CACHE:
        import sympy as sp
        K = sp.QQ.algebraic_field(sp.sqrt(2), sp.I)
        z = (sp.sqrt(2) + sp.I * sp.sqrt(2)) / 2
        _SYMPY_CACHE.update(sp=sp, K=K, z=z, t=sp.Symbol("t"))
    return _SYMPY_CACHE


def _to_sympy(x: FieldElement):
    S = _sympy_field()
    sp, z = S["sp"], S["z"]
    return sum((sp.Rational(c.numerator, c.denominator) * z ** i for i, c in enumerate(x.coeffs)), sp.Integer(0))


def _from_sympy(e) -> FieldElement:
    S = _sympy_field()
    sp = S["sp"]
    e = sp.expand(e)
    d = e.as_coefficients_dict()
    s2 = sp.sqrt(2)
    acc = FieldElement()
    basis = {sp.Integer(1): FieldElement(1), s2: FieldElement(0, 1, 0, -1),
             sp.I: FieldElement(0, 0, 1, 0), s2 * sp.I: FieldElement(0, 1, 0, 1)}
    for k, c in d.items():
        if k not in basis:
            raise ValueError(f"unexpected term {k} in {e}")
        acc = acc + basis[k] * FieldElement(sp.Rational(c).p) / FieldElement(sp.Rational(c).q)
    return acc


def roots_in_K(coeffs) -> list:
    """Distinct roots in K of sum coeffs[i] t^i (coefficients in K).

    Factorisation over Q(sqrt2, i) = K is delegated to sympy.
    """
    coeffs = [fe(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    if len(coeffs) == 2:
        return [-coeffs[0] / coeffs[1]]
    S = _sympy_field()
    sp, K, t = S["sp"], S["K"], S["t"]
    expr = sum((_to_sympy(c) * t ** i for i, c in enumerate(coeffs)), sp.Integer(0))
    P = sp.Poly(expr, t, domain=K)
    out = []
    for fac, _mult in P.factor_list()[1]:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            r = _from_sympy(K.to_sympy(-b / a) if not isinstance(b, sp.Expr) else -b / a)
            if r not in out:
                out.append(r)
    return out


def _min_poly_krylov(T: list, v: list):
    """Coefficients (low to high, monic) of the minimal polynomial of v under T."""
    m = len(T)
    seq = [v]
    while True:
        cur = seq[-1]
        nxt = [sum((T[r][c] * cur[c] for c in range(m) if T[r][c] and cur[c]), ZERO) for r in range(m)]
        # is nxt in span(seq)?
        from .linalg import solve
        cols = [[seq[k][r] for k in range(len(seq))] for r in range(m)]
        sol = solve(cols, nxt)
        if sol is not None:
            return [-s for s in sol] + [ONE]
        seq.append(nxt)


def grouplikes(H: FinHopf, method: str = "auto", seed: int = 1, tries: int = 6) -> list:
    """All grouplike elements of H as sparse vectors.

    method 'scan' looks only at supports of size <= 2.  method 'eigen' (the
    default) works inside the coradical: grouplikes are exactly the common
    eigenvectors of the hit action f -> (id (x) f) Delta restricted to H_0,
    normalised by epsilon.  A generic f separates them; eigenvalues in K
    come from factoring a minimal polynomial over K.
    """
    if method == "scan":
        return _grouplikes_scan(H)
    C0 = coradical(H)
    m = len(C0)
    n = H.dim
    if m == 0:
        return []
    R, piv = rref(C0)
    rng = random.Random(seed)
    found = []
    for _attempt in range(tries):
        f = [fe(rng.randint(-9, 9)) for _ in range(n)]

        def hit(vec):
            out = [ZERO] * n
            for i, a in enumerate(vec):
                if not a:
                    continue
                for j, k, c in H.comult[i]:
                    if f[k]:
                        out[j] = out[j] + a * c * f[k]
            return out
        # matrix of the hit operator in the rref basis of C0 (coordinates are
        # read off at pivot columns)
        T = [[ZERO] * m for _ in range(m)]
        for col, r in enumerate(R):
            img = hit(r)
            for row, pc in enumerate(piv):
                T[row][col] = img[pc]
        v0 = [fe(rng.randint(1, 7)) for _ in range(m)]
        mp = _min_poly_krylov(T, v0)
        lambdas = roots_in_K(mp)
        ambiguous = False
        for lam in lambdas:
            M = [[T[r][c] - (lam if r == c else ZERO) for c in range(m)] for r in range(m)]
            ker = kernel_basis(M, m)
            if len(ker) != 1:
                ambiguous = ambiguous or len(ker) > 1
                continue
            coords = ker[0]
            vec = [ZERO] * n
            for c, r in zip(coords, R):
                if c:
                    for j in range(n):
                        if r[j]:
                            vec[j] = vec[j] + c * r[j]
            g = from_dense(vec)
            e = H.eps(g)
            if not e:
                continue
            g = {k: v / e for k, v in g.items()}
            if is_grouplike(H, g) and g not in found:
                found.append(g)
        if not ambiguous:
            break
    found.sort(key=lambda g: sorted(g))
    return found


def skew_primitives(H: FinHopf, g1: dict, g2: dict) -> list:
    """Basis of {x : Delta(x) = x (x) g2 + g1 (x) x} (dense vectors)."""
    if not is_grouplike(H, g1) or not is_grouplike(H, g2):
        raise NotGrouplike("skew_primitives needs grouplike arguments")
    n = H.dim
    eqs: dict = {}
    for col in range(n):
        t = H.delta({col: ONE})
        for a, c in g2.items():
            add_term(t, (col, a), -c)
        for a, c in g1.items():
            add_term(t, (a, col), -c)
        for key, c in t.items():
            eqs.setdefault(key, {})[col] = c
    rows = [[row.get(j, ZERO) for j in range(n)] for row in eqs.values()]
    if not rows:
        return [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    return kernel_basis(rows, n)
