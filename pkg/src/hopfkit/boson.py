"""Radford biproducts R#H and the lifting families over H.

A graded braided Hopf algebra R is stored degreewise as a quotient of the
tensor algebra T(V) by a graded ideal I.  For every degree n we keep

  words[n]  positions in V^{(x) n} whose classes form a basis of R^n,
  red[n]    the reduction T^n -> R^n (coordinates on that basis).

Multiplication is concatenation followed by reduction.  The braided
coproduct of T(V) is built degreewise from

  D_{k,m} = D_{k,m-1} (x) id + (id_{k-1} (x) c_1 c_2 ... c_m)(D_{k-1,m} (x) id),

which is Delta(u v) = Delta(u)(v (x) 1 + 1 (x) v) with the braided product.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .hopf import FinHopf, Presentation, build_from_presentation, verify_hopf_axioms, \
    coradical
from .linalg import Matrix, kron, rref, kernel_basis, vec_rank, row_space_basis
from .nichols import BraidedVS, braided_space, symmetrizers, lambda_class, LAMBDA0, \
    LAMBDA_SETS, _ci, _ideal_part, _tensor_with_V, nichols_dims
from .report import Report, PASS, FAIL, MISMATCH
from .scalar import FieldElement, ONE, ZERO, XI, HALF, SQRT2, fe, xi_pow
from .sparse import add_into, add_term, sub, scale

__all__ = [
    "BraidedHopfData", "NotFinite", "nichols_as_braided_hopf", "exterior_line",
    "truncated_pre_nichols", "from_ideal", "trivial_braided", "radford_biproduct",
    "projection_check", "Lifting", "build_lifting", "lifting_presentation",
    "verify_lifting", "primitivity_probes", "theorem_b_suite", "compare_with_bosonization",
    "skew_primitives_fast", "generated_subalgebra_dim", "MU_SAMPLE", "bosonization",
]

MU_SAMPLE = (ZERO, ONE, -ONE, SQRT2)


class NotFinite(ValueError):
    pass


# ---------------------------------------------------------------------------
# graded braided Hopf algebras as quotients of T(V)
# ---------------------------------------------------------------------------

@dataclass
class BraidedHopfData:
    yd: object                      # YDModule of degree one
    top: int                        # highest degree kept
    words: list                     # words[n]: positions in V^{(x) n}
    red: list                       # red[n]: Matrix R^n <- T^n
    basis: list                     # [(n, p)] in degree order
    mult: list                      # mult[a][b]: sparse dict over basis
    action: list                    # action[n][i]: Matrix on R^n
    coaction: list                  # coaction[n][m]: Matrix on R^n
    comult: list                    # comult[a]: {(b1, b2): c}
    checks: Report = None
    label: str = ""
    exact_product: bool = True      # False when products above top are discarded

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vdim(self) -> int:
        return self.yd.dim

    def graded_dims(self) -> list:
        return [len(w) for w in self.words]

    def index(self, n: int, p: int) -> int:
        return self._pos[(n, p)]

    def __post_init__(self):
        self._pos = {b: i for i, b in enumerate(self.basis)}

    def word_letters(self, a: int) -> tuple:
        """Letters (1-based V indices) of the tensor word representing basis element a."""
        n, p = self.basis[a]
        pos = self.words[n][p]
        d = self.vdim
        out = []
        for _ in range(n):
            out.append(pos % d + 1)
            pos //= d
        return tuple(reversed(out))

    def degree_one(self, i: int) -> int:
        """Basis index of v_{i+1} (degree one is never reduced)."""
        return self.index(1, self.words[1].index(i))

    def mul(self, u: dict, v: dict) -> dict:
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                add_into(out, self.mult[i][j], a * b)
        return out

    def coact(self, u: dict) -> dict:
        """delta(u) as {(H index, basis index): c} for u in a single degree."""
        degs = {self.basis[a][0] for a in u}
        if len(degs) != 1:
            raise ValueError("coact needs a homogeneous element")
        n = degs.pop()
        off = self.index(n, 0)
        out = {}
        for m, C in enumerate(self.coaction[n]):
            for a, c in u.items():
                p = a - off
                for q in range(C.rows):
                    if C.data[q][p]:
                        add_term(out, (m, off + q), c * C.data[q][p])
        return out

    def primitive_check(self) -> bool:
        for i in range(self.vdim):
            a = self.degree_one(i)
            one = self.index(0, 0)
            if self.comult[a] != {(a, one): ONE, (one, a): ONE}:
                return False
        return True


def _reduction(d: int, n: int, ideal: list):
    """Quotient basis words and the reduction matrix for T^n / span(ideal)."""
    N = d ** n
    if ideal:
        R, piv = rref([list(v) for v in ideal])
        R = [r for r in R if any(r)]
        piv = list(piv)[:len(R)]
    else:
        R, piv = [], []
    pivset = set(piv)
    free = [j for j in range(N) if j not in pivset]
    col = {j: q for q, j in enumerate(free)}
    M = Matrix.zeros(len(free), N)
    for j in free:
        M.data[col[j]][j] = ONE
    for r, p in zip(R, piv):
        for j in free:
            if r[j]:
                M.data[col[j]][p] = M.data[col[j]][p] - r[j]
    return free, M


def _tensor_actions(y, top: int):
    """H-action and coaction matrices on V^{(x) n}, n <= top."""
    H = y.hopf
    n_h = H.dim
    act = [[Matrix.identity(1).scale(H.counit[i]) for i in range(n_h)]]
    coact = [[Matrix.identity(1).scale(H.unit.get(m, ZERO)) for m in range(n_h)]]
    if top >= 1:
        act.append(list(y.action))
        coact.append(list(y.coaction))
    # products e_p e_q in H, as sparse rows
    prod = [[H.mult[p][q] for q in range(n_h)] for p in range(n_h)]
    for n in range(2, top + 1):
        prev_a, prev_c = act[-1], coact[-1]
        A = []
        for i in range(n_h):
            M = Matrix.zeros(y.dim ** n, y.dim ** n)
            for j, k, c in H.comult[i]:
                M = M + kron(prev_a[j], y.action[k]).scale(c)
            A.append(M)
        C = [Matrix.zeros(y.dim ** n, y.dim ** n) for _ in range(n_h)]
        for p in range(n_h):
            if prev_c[p].is_zero():
                continue
            for q in range(n_h):
                if y.coaction[q].is_zero():
                    continue
                K = None
                for m, c in prod[p][q].items():
                    if K is None:
                        K = kron(prev_c[p], y.coaction[q])
                    C[m] = C[m] + K.scale(c)
        act.append(A)
        coact.append(C)
    return act, coact


def _tensor_coproducts(b: BraidedVS, top: int) -> dict:
    """D[(k, m)]: V^{(x) k+m} -> V^{(x) k} (x) V^{(x) m}, Kronecker layout."""
    d = b.dim
    D = {(0, 0): Matrix.identity(1)}
    Bm = {}
    for n in range(1, top + 1):
        for k in range(n + 1):
            m = n - k
            M = Matrix.zeros(d ** n, d ** n)
            if m >= 1:
                M = M + kron(D[(k, m - 1)], Matrix.identity(d))
            if k >= 1:
                if m not in Bm:
                    P = Matrix.identity(d ** (m + 1))
                    for i in range(1, m + 1):
                        P = P @ _ci(b, i, m + 1)
                    Bm[m] = P
                M = M + kron(Matrix.identity(d ** (k - 1)), Bm[m]) @ kron(D[(k - 1, m)], Matrix.identity(d))
            D[(k, m)] = M
    return D


def _kill(M: Matrix, vecs: list) -> bool:
    """M v = 0 for every v in vecs."""
    return all(not any(M @ v) for v in vecs)


def from_ideal(y, ideal: dict, top: int, label: str = "", exact_product: bool = True,
               b: BraidedVS | None = None) -> BraidedHopfData:
    """R = T(V)/I kept up to degree top; ideal[n] spans I^n (n <= top).

    With exact_product=True the ideal must contain every tensor of degree
    above top (as for a finite Nichols algebra); otherwise products landing
    above top are dropped and only the coalgebra of degrees <= top is exact.
    """
    d = y.dim
    b = b or braided_space(y, check=False)
    rep = Report(f"braided Hopf data {label}")
    words, red = [], []
    for n in range(top + 1):
        wn, Rn = _reduction(d, n, ideal.get(n, []) if n >= 1 else [])
        words.append(wn)
        red.append(Rn)
    basis = [(n, p) for n in range(top + 1) for p in range(len(words[n]))]
    pos = {bb: i for i, bb in enumerate(basis)}

    act_T, coact_T = _tensor_actions(y, top)
    n_h = y.hopf.dim
    action, coaction = [], []
    ok_act = ok_coact = True
    for n in range(top + 1):
        Rn = red[n]
        In = ideal.get(n, []) if n >= 1 else []
        L = Matrix.zeros(d ** n, len(words[n]))
        for q, j in enumerate(words[n]):
            L.data[j][q] = ONE
        An, Cn = [], []
        for i in range(n_h):
            RA = Rn @ act_T[n][i]
            ok_act = ok_act and _kill(RA, In)
            An.append(RA @ L)
            RC = Rn @ coact_T[n][i]
            ok_coact = ok_coact and _kill(RC, In)
            Cn.append(RC @ L)
        action.append(An)
        coaction.append(Cn)
    rep.add("ideal is H-stable", ok_act)
    rep.add("ideal is H-costable", ok_coact)

    # two-sided ideal: I^n (x) V and V (x) I^n land in I^{n+1}
    ok_id = True
    for n in range(1, top):
        In = ideal.get(n, [])
        if not In:
            continue
        ext = _tensor_with_V(In, d, False) + _tensor_with_V(In, d, True)
        ok_id = ok_id and _kill(red[n + 1], ext)
    rep.add("ideal is two-sided", ok_id)

    # multiplication
    mult = []
    for (n, p) in basis:
        row = []
        for (m, q) in basis:
            if n + m > top:
                row.append({})
                continue
            j = words[n][p] * d ** m + words[m][q]
            R = red[n + m]
            row.append({pos[(n + m, r)]: R.data[r][j] for r in range(R.rows) if R.data[r][j]})
        mult.append(row)

    # braided coproduct
    D = _tensor_coproducts(b, top + 1 if exact_product else top)
    comult = []
    ok_co = True
    for (n, p) in basis:
        out = {}
        for k in range(n + 1):
            m = n - k
            Dk = D[(k, m)]
            Rk, Rm = red[k], red[m]
            col = [Dk.data[r][words[n][p]] for r in range(d ** n)]
            for u, c in enumerate(col):
                if not c:
                    continue
                a_, b_ = divmod(u, d ** m)
                for r1 in range(Rk.rows):
                    x1 = Rk.data[r1][a_]
                    if not x1:
                        continue
                    for r2 in range(Rm.rows):
                        x2 = Rm.data[r2][b_]
                        if x2:
                            add_term(out, (pos[(k, r1)], pos[(m, r2)]), c * x1 * x2)
        comult.append(out)
    # coideal: Delta(I^n) in I (x) T + T (x) I
    bad_co = []
    for n in range(1, top + 1):
        for v in ideal.get(n, []):
            for k in range(n + 1):
                m = n - k
                img = D[(k, m)] @ v
                if any(img):
                    red_img = kron(red[k], red[m]) @ img
                    if any(red_img):
                        ok_co = False
                        bad_co.append(f"I^{n} -> T^{k} (x) T^{m}")
    if exact_product:
        # everything above top is in the ideal, in particular T^{top+1}
        n = top + 1
        for k in range(1, n):
            if any(any(row) for row in (kron(red[k], red[n - k]) @ D[(k, n - k)]).data):
                ok_co = False
                bad_co.append(f"T^{n} -> T^{k} (x) T^{n - k}")
    rep.add("ideal is a coideal", ok_co, ("not a coideal: " + ", ".join(sorted(set(bad_co))[:4])) if bad_co else "")
    data = BraidedHopfData(y, top, words, red, basis, mult, action, coaction, comult,
                           rep, label, exact_product)
    rep.add("degree one is primitive", data.primitive_check())
    return data


def nichols_as_braided_hopf(params, maxdeg: int = 6, y=None) -> BraidedHopfData:
    """B(V) for a simple YD module with a finite Nichols algebra."""
    from .yd import translate
    y = y or translate(tuple(params))
    b = braided_space(y)
    rep = nichols_dims(b, maxdeg, keep_kernels=True)
    if rep.verdict != "finite":
        raise NotFinite(f"{tuple(params)}: Nichols algebra is {rep.verdict} "
                        f"(dims {rep.dims})")
    top = max(i for i, x in enumerate(rep.dims) if x)
    Ss = symmetrizers(b, top)
    ideal = {n: kernel_basis(Ss[n]) for n in range(2, top + 1)}
    return from_ideal(y, ideal, top, f"B(V{tuple(params)})", b=b)


def exterior_line(params, y=None) -> BraidedHopfData:
    """k[v]/(v^2) on a one-dimensional YD module, whatever its braiding.

    This is the Nichols algebra only when c(v (x) v) = -v (x) v; otherwise the
    coideal check in the report fails and so will the biproduct."""
    from .yd import translate
    y = y or translate(tuple(params))
    if y.dim != 1:
        raise ValueError("exterior_line needs a one-dimensional module")
    return from_ideal(y, {}, 1, f"ext{tuple(params)}", b=braided_space(y, check=False))


def truncated_pre_nichols(params, degree: int, y=None) -> BraidedHopfData:
    """T(V) modulo the Nichols relations of degree < degree, kept up to degree.

    Products above degree are dropped, so only the coalgebra and the
    products of total degree <= degree are exact.  This is the ambient in
    which the next relations of B(V) are tested for primitivity."""
    from .yd import translate
    y = y or translate(tuple(params))
    b = braided_space(y)
    d = y.dim
    Ss = symmetrizers(b, max(degree - 1, 1))
    ideal = {}
    lower: list = []
    for n in range(2, degree + 1):
        rel = kernel_basis(Ss[n]) if n < degree else []
        lower = _ideal_part(d, lower, rel)
        ideal[n] = lower
    return from_ideal(y, ideal, degree, f"T(V{tuple(params)})/I_<{degree}",
                      exact_product=False, b=b)


def trivial_braided(H: FinHopf) -> BraidedHopfData:
    """R = k, concentrated in degree zero."""
    from .yd import trivial_yd
    y = trivial_yd(H, 0)
    rep = Report("braided Hopf data k")
    n_h = H.dim
    one = Matrix.identity(1)
    action = [[one.scale(H.counit[i]) for i in range(n_h)]]
    coaction = [[one.scale(H.unit.get(m, ZERO)) for m in range(n_h)]]
    return BraidedHopfData(y, 0, [[0]], [one], [(0, 0)], [[{0: ONE}]], action, coaction,
                           [{(0, 0): ONE}], rep, "k")


# ---------------------------------------------------------------------------
# the biproduct
# ---------------------------------------------------------------------------

def _letter(i: int, d: int) -> str:
    if d <= 2:
        return "xy"[i]
    return f"v{i + 1}"


def radford_biproduct(r: BraidedHopfData, H: FinHopf | None = None, name: str = "",
                      with_antipode: bool = True) -> FinHopf:
    """R#H on the basis r_a # e_h (index a * dim H + h).

    (r#g)(s#h) = r (g_(1) . s) # g_(2) h
    Delta(r#g) = r^(1) # (r^(2))_(-1) g_(1) (x) (r^(2))_(0) # g_(2)
    """
    H = H or r.yd.hopf
    nh = H.dim
    nr = r.dim
    N = nr * nh
    offs = {}
    for a, (n, p) in enumerate(r.basis):
        offs.setdefault(n, a)

    def R_vec(n, coords):
        base = offs[n]
        return {base + q: c for q, c in enumerate(coords) if c}

    # g . s for basis g of H and s of R: sparse over R
    act_cache = {}

    def act(g, s):
        key = (g, s)
        if key not in act_cache:
            n, p = r.basis[s]
            M = r.action[n][g]
            act_cache[key] = R_vec(n, [M.data[q][p] for q in range(M.rows)])
        return act_cache[key]

    mult = []
    for A in range(N):
        a, g = divmod(A, nh)
        row = []
        for B in range(N):
            s, h = divmod(B, nh)
            out = {}
            for g1, g2, c in H.comult[g]:
                gs = act(g1, s)
                if not gs:
                    continue
                g2h = H.mult[g2][h]
                if not g2h:
                    continue
                rs = {}
                for t, ct in gs.items():
                    add_into(rs, r.mult[a][t], ct)
                for u, cu in rs.items():
                    for k, ck in g2h.items():
                        add_term(out, u * nh + k, c * cu * ck)
            row.append(out)
        mult.append(row)

    # coaction of basis elements of R: list of (m, t, c) with delta(t) = sum e_m (x) ...
    def coact(t):
        n, p = r.basis[t]
        out = []
        for m, C in enumerate(r.coaction[n]):
            for q in range(C.rows):
                if C.data[q][p]:
                    out.append((m, offs[n] + q, C.data[q][p]))
        return out
    coact_cache = {t: coact(t) for t in range(nr)}

    comult = []
    for A in range(N):
        a, g = divmod(A, nh)
        out = {}
        for (p1, p2), c in r.comult[a].items():
            for m, t, cm in coact_cache[p2]:
                for g1, g2, cg in H.comult[g]:
                    for k, ck in H.mult[m][g1].items():
                        add_term(out, (p1 * nh + k, t * nh + g2), c * cm * cg * ck)
        comult.append([(j, k, c) for (j, k), c in sorted(out.items())])

    unit_r = r.index(0, 0)
    counit = [H.counit[h] if a == unit_r else ZERO for a in range(nr) for h in range(nh)]
    unit = {unit_r * nh + k: c for k, c in H.unit.items()}

    d = r.vdim
    gens = {}
    for gname, vec in H.generators.items():
        gens[gname] = {unit_r * nh + k: c for k, c in vec.items()}
    for i in range(d):
        a = r.degree_one(i)
        gens[_letter(i, d)] = {a * nh + k: c for k, c in H.unit.items()}
    gen_words = {}
    for A in range(N):
        a, h = divmod(A, nh)
        letters = tuple(_letter(i - 1, d) for i in r.word_letters(a))
        hw = H.words[h] if H.words is not None else ()
        gen_words[A] = {letters + tuple(hw): ONE}

    labels = []
    for a in range(nr):
        rl = "".join(_letter(i - 1, d) for i in r.word_letters(a))
        for h in range(nh):
            hl = H.basis[h]
            labels.append((rl + ("" if hl == "1" else hl)) if rl else hl)

    B = FinHopf(labels, mult, comult, counit, Matrix.identity(N), unit=unit,
                name=name or f"{r.label}#{H.name or 'H'}", generators=gens, gen_words=gen_words)
    if with_antipode:
        B.antipode = _biproduct_antipode(B, r, H, offs)
        B._Scols = None
    B.braided = r
    return B


def _biproduct_antipode(B: FinHopf, r: BraidedHopfData, H: FinHopf, offs) -> Matrix:
    """S(r#h) = S(1#h) S(r#1), S(v#1) = -sum_m (1#S(e_m))(C_m v # 1), S anti-multiplicative."""
    nh = H.dim
    N = B.dim
    unit_r = r.index(0, 0)

    def hvec(vec):
        return {unit_r * nh + k: c for k, c in vec.items()}

    S_h = [hvec(H.Scols[h]) for h in range(nh)]
    d = r.vdim
    S_v = []
    for i in range(d):
        a = r.degree_one(i)
        out = {}
        for m in range(nh):
            C = r.coaction[1][m]
            col = [C.data[q][i] for q in range(d)]
            if not any(col):
                continue
            cv = {(offs[1] + q) * nh + k: c * ck for q, c in enumerate(col) if c
                  for k, ck in H.unit.items()}
            add_into(out, B.mul(S_h[m], cv), -ONE)
        S_v.append(out)
    Sm = Matrix.zeros(N, N)
    for A in range(N):
        a, h = divmod(A, nh)
        s_r = B.unit
        for i in r.word_letters(a):
            s_r = B.mul(S_v[i - 1], s_r)
        val = B.mul(S_h[h], s_r)
        for k, c in val.items():
            Sm.data[k][A] = c
    return Sm


def projection_check(B: FinHopf, H: FinHopf | None = None) -> Report:
    """iota: H -> R#H, pi: R#H -> H; both Hopf maps and pi iota = id."""
    r = B.braided
    H = H or r.yd.hopf
    nh = H.dim
    unit_r = r.index(0, 0)
    rep = Report("projection and inclusion")
    iota = lambda v: {unit_r * nh + k: c for k, c in v.items()}

    def pi(v):
        out = {}
        for A, c in v.items():
            a, h = divmod(A, nh)
            if a == unit_r:
                add_term(out, h, c)
        return out
    rep.add("pi iota = id", all(pi(iota({h: ONE})) == {h: ONE} for h in range(nh)))
    bad = 0
    for A in range(B.dim):
        for C in range(B.dim):
            if pi(B.mult[A][C]) != H.mul(pi({A: ONE}), pi({C: ONE})):
                bad += 1
    rep.add("pi multiplicative", bad == 0, f"{bad} bad pairs" if bad else "")
    bad = 0
    for A in range(B.dim):
        lhs = {}
        for j, k, c in B.comult[A]:
            pj, pk = pi({j: ONE}), pi({k: ONE})
            for x, cx in pj.items():
                for y, cy in pk.items():
                    add_term(lhs, (x, y), c * cx * cy)
        if lhs != H.delta(pi({A: ONE})):
            bad += 1
    rep.add("pi comultiplicative", bad == 0)
    bad = [h for h in range(nh) if B.delta(iota({h: ONE})) != {(unit_r * nh + j, unit_r * nh + k): c for j, k, c in H.comult[h]}]
    rep.add("iota comultiplicative", not bad)
    return rep.finish()


def bosonization(params, maxdeg: int = 6) -> FinHopf:
    """B(V)#H for a simple YD module with finite Nichols algebra; for one-dimensional
    modules the exterior line is used, as in the stated list."""
    if len(params) == 3:
        return radford_biproduct(exterior_line(params))
    return radford_biproduct(nichols_as_braided_hopf(params, maxdeg))


# ---------------------------------------------------------------------------
# liftings
# ---------------------------------------------------------------------------

@dataclass
class Lifting:
    family: int
    params: tuple
    mu: FieldElement
    carrier: FinHopf
    variant: str = "corrected"

    @property
    def dim(self) -> int:
        return self.carrier.dim


def _hw(word: str, power: int = 0) -> str:
    return word + "a" * (power % 4)


def _family5_constants(l2, l4, variant):
    """(kappa, coefficient of ca^{j-1} (x) x in Delta(y)) for family 5.

    As printed: xy + l4 yx = 1/2 (l4 - l2)(l2 + 1) mu ca and 1/2 xi (l2 - l4).
    The coaction of the module gives 1/2 xi l1^3 (l2 - l4) = 1/2 (l2 - l4)
    since l1 = xi, and the second coproduct identity then forces
    kappa = 1/2 (l4 - l2)(l2 + l4) = 1."""
    if variant == "printed":
        return HALF * (l4 - l2) * (l2 + 1), HALF * XI * (l2 - l4)
    if variant == "corrected":
        return HALF * (l4 - l2) * (l2 + l4), HALF * (l2 - l4)
    raise ValueError(f"unknown variant {variant!r}")


def lifting_presentation(family: int, params, mu, variant: str = "corrected") -> Presentation:
    from .presets import H_presentation, H_alg
    from .rep import lambdas
    if family not in (5, 6):
        raise ValueError("family must be 5 or 6")
    params = tuple(params)
    if params not in LAMBDA_SETS[family]:
        raise ValueError(f"{params} is not in class {family}")
    mu = fe(mu)
    i, j, k, l = params
    l1, l2, l3, l4 = lambdas(i, j, k, l)
    Hp = H_presentation()
    rules = dict(Hp.rules)
    inv = lambda z: ONE / fe(z)
    half = HALF
    if family == 5:
        qa = -l4 * XI               # ax = qa xa, bx = qa xb
        qc = XI                     # cx = qc xc, dx = qc xd
        kappa, ycoef = _family5_constants(l2, l4, variant)
        rules.update({
            "xa": {("a", "x"): inv(qa)}, "xb": {("b", "x"): inv(qa)},
            "xc": {("c", "x"): inv(qc)}, "xd": {("d", "x"): inv(qc)},
            # ay + l4 ya = l4 xc ; by + l4 yb = l4 xd ; cy + yc = xa ; dy + yd = xb
            "ya": {("c", "x"): inv(qc), ("a", "y"): -l4},
            "yb": {("d", "x"): inv(qc), ("b", "y"): -l4},
            "yc": {("a", "x"): inv(qa), ("c", "y"): -ONE},
            "yd": {("b", "x"): inv(qa), ("d", "y"): -ONE},
            "yx": {("c", "a"): l4 * kappa * mu, ("x", "y"): -l4},
        })
        g_x, h_x, cx_ = _hw("", j), _hw("b", j - 1), -(l2 + l4)
        g_y, h_y, cy_ = _hw("d", j - 1), _hw("c", j - 1), ycoef
    else:
        qa = -XI
        qc = l1
        rules.update({
            "xa": {("a", "x"): inv(qa)}, "xb": {("b", "x"): inv(qa)},
            "xc": {("c", "x"): inv(qc)}, "xd": {("d", "x"): inv(qc)},
            # ay + ya = l4 xc ; by + yb = l4 xd ; cy + l4 yc = xa ; dy + l4 yd = xb
            "ya": {("c", "x"): l4 * inv(qc), ("a", "y"): -ONE},
            "yb": {("d", "x"): l4 * inv(qc), ("b", "y"): -ONE},
            "yc": {("a", "x"): l4 * inv(qa), ("c", "y"): -l4},
            "yd": {("b", "x"): l4 * inv(qa), ("d", "y"): -l4},
            "yx": {("c", "a"): l4 * l4 * mu, ("x", "y"): -l4},
        })
        g_x, h_x, cx_ = _hw("d", j - 1), _hw("c", j - 1), l2 * l4 - 1
        g_y, h_y, cy_ = _hw("", j), _hw("b", j - 1), -half * (l2 * l4 + 1)
    # x^2 + 2 l4 y^2 = mu (1 - a^2)
    rules["yy"] = {(): half * l4 * mu, ("a", "a"): -half * l4 * mu, ("x", "x"): -half * l4}
    rules["xxxx"] = {}
    comult = dict(Hp.comult)
    comult["x"] = {("x", ""): ONE, (g_x, "x"): ONE}
    comult["y"] = {("y", ""): ONE, (g_y, "y"): ONE}
    if cx_:
        comult["x"][(h_x, "y")] = fe(cx_)
    if cy_:
        comult["y"][(h_y, "x")] = fe(cy_)
    counit = dict(Hp.counit)
    counit["x"] = ZERO
    counit["y"] = ZERO
    # S(x) = -S(g_x) x - c S(h_x) y, and likewise for y
    H = H_alg()

    def S_words(word, letter, c):
        v = H.S(H.word(tuple(word)))
        return {tuple(H.words[t]) + (letter,): -c * ct for t, ct in v.items()}
    antipode = dict(Hp.antipode)
    sx = S_words(g_x, "x", ONE)
    if cx_:
        add_into(sx, S_words(h_x, "y", fe(cx_)))
    sy = S_words(g_y, "y", ONE)
    if cy_:
        add_into(sy, S_words(h_y, "x", fe(cy_)))
    antipode["x"] = sx
    antipode["y"] = sy
    order = []
    Hwords = H.words
    for tail in ("", "x", "y", "xx", "xy", "xxx", "xxy", "xxxy"):
        for hw in Hwords:
            order.append(tuple(hw) + tuple(tail))
    return Presentation(["a", "b", "c", "d", "x", "y"], rules, comult, counit, antipode,
                        basis_order=order, name=f"Lambda{family}{params}(mu={mu})")


def lifting_relations(family: int, params, mu, variant: str = "corrected") -> list:
    """The defining relations as (name, lhs - rhs) word combinations."""
    from .rep import lambdas
    i, j, k, l = params
    l1, l2, l3, l4 = lambdas(i, j, k, l)
    mu = fe(mu)
    c = lambda *t: {tuple(wd): fe(x) for x, wd in t}
    if family == 5:
        kappa, _ = _family5_constants(l2, l4, variant)
        rels = [
            ("ax = -l4 xi xa", c((1, "ax"), (l4 * XI, "xa"))),
            ("bx = -l4 xi xb", c((1, "bx"), (l4 * XI, "xb"))),
            ("cx = xi xc", c((1, "cx"), (-XI, "xc"))),
            ("dx = xi xd", c((1, "dx"), (-XI, "xd"))),
            ("ay + l4 ya = l4 xc", c((1, "ay"), (l4, "ya"), (-l4, "xc"))),
            ("by + l4 yb = l4 xd", c((1, "by"), (l4, "yb"), (-l4, "xd"))),
            ("cy + yc = xa", c((1, "cy"), (1, "yc"), (-1, "xa"))),
            ("dy + yd = xb", c((1, "dy"), (1, "yd"), (-1, "xb"))),
            ("xy + l4 yx = kappa mu ca", c((1, "xy"), (l4, "yx"), (-kappa * mu, "ca"))),
        ]
    else:
        rels = [
            ("ax = -xi xa", c((1, "ax"), (XI, "xa"))),
            ("bx = -xi xb", c((1, "bx"), (XI, "xb"))),
            ("cx = l1 xc", c((1, "cx"), (-l1, "xc"))),
            ("dx = l1 xd", c((1, "dx"), (-l1, "xd"))),
            ("ay + ya = l4 xc", c((1, "ay"), (1, "ya"), (-l4, "xc"))),
            ("by + yb = l4 xd", c((1, "by"), (1, "yb"), (-l4, "xd"))),
            ("cy + l4 yc = xa", c((1, "cy"), (l4, "yc"), (-1, "xa"))),
            ("dy + l4 yd = xb", c((1, "dy"), (l4, "yd"), (-1, "xb"))),
            ("xy + l4 yx = l4 mu ca", c((1, "xy"), (l4, "yx"), (-l4 * mu, "ca"))),
        ]
    rels.append(("x^2 + 2 l4 y^2 = mu (1 - a^2)",
                 c((1, "xx"), (2 * l4, "yy"), (-mu, ""), (mu, "aa"))))
    rels.append(("x^4 = 0", c((1, "xxxx"))))
    return rels


def build_lifting(family: int, params, mu, variant: str = "corrected") -> Lifting:
    """Lambda^family(mu) from its presentation.  variant="printed" uses the
    family-5 constants exactly as displayed (not a Hopf algebra, see
    _family5_constants); family 6 has a single variant."""
    p = lifting_presentation(family, params, mu, variant)
    L = build_from_presentation(p)
    if L.dim != 128:
        raise ValueError(f"normal basis has {L.dim} elements")
    return Lifting(family, tuple(params), fe(mu), L, variant if family == 5 else "corrected")


def _eval_words(A: FinHopf, comb: dict) -> dict:
    out = {}
    for word, c in comb.items():
        add_into(out, A.word(word), c)
    return out


def generated_subalgebra_dim(A: FinHopf, vecs: list) -> int:
    """Dimension of the unital subalgebra generated by dense vectors."""
    n = A.dim
    span = row_space_basis([[A.unit.get(i, ZERO) for i in range(n)]] + [list(v) for v in vecs])
    while True:
        sparse = [{i: x for i, x in enumerate(v) if x} for v in span]
        new = list(span)
        for u in sparse:
            for v in sparse:
                uv = A.mul(u, v)
                new.append([uv.get(i, ZERO) for i in range(n)])
        nxt = row_space_basis(new)
        if len(nxt) == len(span):
            return len(span)
        span = nxt


def skew_primitives_fast(A: FinHopf, g1: dict, g2: dict, probes: int = 3, seed: int = 0) -> list:
    """Basis of P_{g1,g2}(A).  Random left functionals cut the candidate space
    down, then the full equations are solved on the candidates."""
    n = A.dim
    rng = random.Random(seed)
    deltas = [A.comult[i] for i in range(n)]
    rows = []
    for _ in range(probes):
        phi = [fe(rng.randint(-3, 3)) for _ in range(n)]
        phi_g1 = sum((phi[i] * c for i, c in g1.items()), ZERO)
        # (phi (x) id)(Delta x - x (x) g2 - g1 (x) x) = 0, one equation per right index
        eq = [[ZERO] * n for _ in range(n)]
        for col in range(n):
            for j, k, c in deltas[col]:
                if phi[j]:
                    eq[k][col] = eq[k][col] + phi[j] * c
            for k, c in g2.items():
                eq[k][col] = eq[k][col] - phi[col] * c
            eq[col][col] = eq[col][col] - phi_g1
        rows.extend(r for r in eq if any(r))
    cand = kernel_basis(rows, n) if rows else [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    if not cand:
        return []
    # exact equations on the candidate span
    eqs: dict = {}
    for t, v in enumerate(cand):
        x = {i: c for i, c in enumerate(v) if c}
        res = A.delta(x)
        for i, c in x.items():
            for k, ck in g2.items():
                add_term(res, (i, k), -c * ck)
            for k, ck in g1.items():
                add_term(res, (k, i), -c * ck)
        for key, c in res.items():
            eqs.setdefault(key, [ZERO] * len(cand))[t] = c
    sol = kernel_basis(list(eqs.values()), len(cand)) if eqs else \
        [[ONE if i == j else ZERO for i in range(len(cand))] for j in range(len(cand))]
    out = []
    for s in sol:
        v = [ZERO] * n
        for t, c in enumerate(s):
            if c:
                for i in range(n):
                    if cand[t][i]:
                        v[i] = v[i] + c * cand[t][i]
        out.append(v)
    return out


def verify_lifting(L: Lifting, axioms: bool = True) -> Report:
    A = L.carrier
    rep = Report(f"lifting Lambda{L.family}{L.params} mu={L.mu}"
                 + (" (printed constants)" if L.variant == "printed" else ""))
    if L.family == 5:
        from .rep import lambdas
        _, l2, _, l4 = lambdas(*L.params)
        pk, py = _family5_constants(l2, l4, "printed")
        ck, cy = _family5_constants(l2, l4, "corrected")
        same = pk == ck and py == cy
        rep.add("family-5 constants as displayed", PASS if same else MISMATCH,
                "" if same else f"displayed kappa={pk}, Delta(y) coeff={py}; "
                                f"consistent kappa={ck}, coeff={cy}")
    rep.add("dimension", A.dim == 128, f"{A.dim}")
    if axioms:
        rep.extend(verify_hopf_axioms(A, mode="generators"), "hopf: ")
    bad = [name for name, comb in lifting_relations(L.family, L.params, L.mu, L.variant)
           if _eval_words(A, comb)]
    rep.add("defining relations hold", not bad, ", ".join(bad))
    # free over H on {1, x, y, x^2, xy, x^3, x^2y, x^3y}
    from .presets import H_alg
    H = H_alg()
    tails = ["", "x", "y", "xx", "xy", "xxx", "xxy", "xxxy"]
    vecs = []
    for hw in H.words:
        for t in tails:
            v = A.word(tuple(hw) + tuple(t))
            vecs.append([v.get(i, ZERO) for i in range(A.dim)])
    rep.add("free H-basis {1,x,y,x^2,xy,x^3,x^2y,x^3y}", vec_rank(vecs) == 128)
    C0 = coradical(A)
    rep.add("coradical dimension", len(C0) == 12, f"{len(C0)}", len(C0))
    gen_dim = generated_subalgebra_dim(A, C0)
    rep.add("subalgebra generated by the coradical", gen_dim == 16, f"{gen_dim}", gen_dim)
    da = A.word(("d", "a"))
    P = skew_primitives_fast(A, A.unit, da)
    expected = sub(A.unit, da)
    exp_dense = [expected.get(i, ZERO) for i in range(A.dim)]
    ok = len(P) == 1 and vec_rank([P[0], exp_dense]) == 1
    rep.add("P_{1,da} = span{1 - da}", ok, f"dim {len(P)}")
    return rep.finish()


def compare_with_bosonization(L: Lifting, B: FinHopf | None = None) -> Report:
    """Generator-matching map Lambda(0) -> B(V)#H: bijective, multiplicative,
    comultiplicative, counital, and intertwines the antipodes."""
    A = L.carrier
    B = B or bosonization(L.params)
    rep = Report(f"Lambda{L.family}{L.params}(mu={L.mu}) vs bosonization")
    n = A.dim
    if B.dim != n:
        rep.add("dimensions agree", False, f"{n} vs {B.dim}")
        return rep.finish()
    images = [B.word(word) for word in A.words]
    M = [[images[j].get(i, ZERO) for j in range(n)] for i in range(n)]
    bij = vec_rank([[M[i][j] for i in range(n)] for j in range(n)]) == n
    rep.add("basis map is bijective", bij)

    def F(v):
        out = {}
        for i, c in v.items():
            add_into(out, images[i], c)
        return out
    bad = 0
    for g, gv in A.generators.items():
        Fg = F(gv)
        for j in range(n):
            if F(A.mul(gv, {j: ONE})) != B.mul(Fg, images[j]):
                bad += 1
    rep.add("multiplication constants agree", bad == 0, f"{bad} bad products" if bad else "generators x basis")
    bad = 0
    for j in range(n):
        lhs = {}
        for p, q, c in A.comult[j]:
            for x, cx in images[p].items():
                for y, cy in images[q].items():
                    add_term(lhs, (x, y), c * cx * cy)
        if lhs != B.delta(images[j]):
            bad += 1
    rep.add("comultiplication constants agree", bad == 0, f"{bad} bad" if bad else "all basis elements")
    rep.add("counit agrees", all(A.counit[j] == B.eps(images[j]) for j in range(n)))
    rep.add("antipode agrees", all(F(A.Scols[j]) == B.S(images[j]) for j in range(n)))
    return rep.finish()


# ---------------------------------------------------------------------------
# primitivity probes
# ---------------------------------------------------------------------------

def _tens(A, u, v):
    out = {}
    for i, a in u.items():
        for j, b in v.items():
            add_term(out, (i, j), a * b)
    return out


def _probe(rep, A, name, z, expected_pairs, quiet=False):
    """Compare Delta(z) with sum of u (x) v over expected_pairs."""
    exp = {}
    for (u, v, c) in expected_pairs:
        add_into(exp, _tens(A, u, v), c)
    got = A.delta(z)
    ok = got == exp
    if ok or not quiet:
        rep.add(name, ok, "" if ok else f"residual has {len(sub(got, exp))} terms")
    return ok


def _fit_coefficient(A, z, base, u, v):
    """t with Delta(z) = base + t u (x) v, or None."""
    exp = {}
    for (p, q, c) in base:
        add_into(exp, _tens(A, p, q), c)
    res = sub(A.delta(z), exp)
    uv = _tens(A, u, v)
    if not uv:
        return ZERO if not res else None
    k0 = next(iter(uv))
    t = res.get(k0, ZERO) / uv[k0]
    return t if not sub(res, scale(uv, t)) else None


def primitivity_probes(params, B: FinHopf | None = None) -> Report:
    """Coproduct identities that force the relations of B(V) in a lifting.

    Each identity is evaluated in the bosonization of T(V) modulo the Nichols
    relations of lower degree (where the element in question is nonzero);
    if a bosonization B(V)#H is passed, the same identities are also
    evaluated there, where both sides vanish."""
    from .rep import lambdas
    params = tuple(params)
    cls = lambda_class(params)
    if cls not in (3, 4, 5, 6):
        raise ValueError(f"{params} is not in classes 3-6")
    i, j, k, l = params
    l1, l2, l3, l4 = lambdas(i, j, k, l)
    xj = xi_pow(j)
    rep = Report(f"primitivity probes {params}")

    def run(A, tag):
        W = lambda s: A.word(tuple(s))
        one = A.unit
        _probe(rep, A, f"{tag}Delta(1) = 1 (x) 1", one, [(one, one, ONE)])
        x2 = W("xx")
        a2, da, ba, ca = W("aa"), W("da"), W("ba"), W("ca")
        if cls == 3:
            r = sub(W("xy"), scale(W("yx"), xj))
            _probe(rep, A, f"{tag}Delta(x^2)", x2,
                   [(x2, one, ONE), (a2, x2, ONE), (ba, r, XI * (xj - l1))])
            _probe(rep, A, f"{tag}Delta(xy - xi^j yx)", r, [(r, one, ONE), (da, r, ONE)])
        elif cls == 4:
            r = add_into(dict(W("xy")), W("yx"), xj)
            _probe(rep, A, f"{tag}Delta(x^2)", x2,
                   [(x2, one, ONE), (a2, x2, ONE), (ba, r, XI * (1 + xj * l4))])
            _probe(rep, A, f"{tag}Delta(xy + xi^j yx)", r, [(r, one, ONE), (da, r, ONE)])
        else:
            q = add_into(dict(x2), W("yy"), 2 * l4)
            _probe(rep, A, f"{tag}Delta(x^2 + 2 l4 y^2)", q, [(q, one, ONE), (a2, q, ONE)])
            r = add_into(dict(W("xy")), W("yx"), l4)
            base = [(r, one, ONE), (da, r, ONE)]
            printed = HALF * (l2 - l4) * (l2 + 1) if cls == 5 else -l4
            if not _probe(rep, A, f"{tag}Delta(xy + l4 yx)", r, base + [(ca, q, printed)], quiet=True):
                # report the coefficient that does hold, if any
                coef = _fit_coefficient(A, r, base, ca, q)
                rep.add(f"{tag}Delta(xy + l4 yx)", MISMATCH if coef is not None else FAIL,
                        f"displayed coefficient {printed}, computed {coef}")

    def run4(A, tag):
        W = lambda s: A.word(tuple(s))
        one = A.unit
        z = W("yyyy") if cls in (3, 4) else W("xxxx")
        nm = "y^4" if cls in (3, 4) else "x^4"
        if tag.startswith("B(V)"):
            rep.add(f"{tag}{nm} = 0 (a relation of B(V))", not z)
        else:
            rep.add(f"{tag}{nm} is nonzero here", bool(z))
        _probe(rep, A, f"{tag}Delta({nm}) = {nm} (x) 1 + 1 (x) {nm}", z, [(z, one, ONE), (one, z, ONE)])

    A2 = radford_biproduct(truncated_pre_nichols(params, 2), with_antipode=False)
    run(A2, "T(V)#H: ")
    r4 = truncated_pre_nichols(params, 4)
    A4 = radford_biproduct(r4, with_antipode=False)
    run4(A4, "pre-Nichols#H: ")
    # the coaction of the degree-four relation is trivial
    v = {r4.degree_one(1 if cls in (3, 4) else 0): ONE}
    z = r4.mul(r4.mul(v, v), r4.mul(v, v))
    nm = "y^4" if cls in (3, 4) else "x^4"
    H = r4.yd.hopf
    unit = next(iter(H.unit))
    triv = {(unit, a): c for a, c in z.items()}
    rep.add(f"pre-Nichols: delta({nm}) = 1 (x) {nm}", r4.coact(z) == triv)
    if B is not None:
        run(B, "B(V)#H: ")
        run4(B, "B(V)#H: ")
    return rep.finish()


# ---------------------------------------------------------------------------
# the list of Hopf algebras over H
# ---------------------------------------------------------------------------

def _job_boson(params):
    rep = Report(f"bosonization {params}")
    if len(params) == 3:
        r = exterior_line(params)
    else:
        r = nichols_as_braided_hopf(params)
    rep.extend(r.checks, "R: ")
    B = radford_biproduct(r)
    expected = 32 if len(params) == 3 else 128
    rep.add("dimension", B.dim == expected, f"{B.dim}", B.dim)
    rep.extend(verify_hopf_axioms(B, mode="generators"), "hopf: ")
    rep.extend(projection_check(B), "")
    if len(params) == 4:
        rep.extend(primitivity_probes(params, B), "probe: ")
    return rep.finish()


def _job_lifting(family, params, mu):
    L = build_lifting(family, params, mu)
    rep = verify_lifting(L)
    if not mu:
        rep.extend(compare_with_bosonization(L), "mu=0: ")
        rep.extend(primitivity_probes(params), "probe: ")
    return rep


def theorem_b_suite(mus=MU_SAMPLE, jobs: int = 1, lambda0=None) -> Report:
    """Build and verify every algebra of the stated list."""
    lambda0 = LAMBDA0 if lambda0 is None else lambda0
    tasks = [("boson", p) for p in lambda0]
    tasks += [("boson", p) for c in (3, 4) for p in LAMBDA_SETS[c]]
    tasks += [("lift", (f, p, m)) for f in (5, 6) for p in LAMBDA_SETS[f] for m in mus]
    rep = Report("Theorem B list")
    results = _run_jobs(tasks, jobs)
    dims = {}
    for (kind, arg), sub_rep in zip(tasks, results):
        if kind == "boson":
            label = f"boson{tuple(arg)}"
            d = next((c.data for c in sub_rep.checks if c.name == "dimension"), None)
        else:
            f, p, m = arg
            label = f"Lambda{f}{tuple(p)} mu={m}"
            d = 128
        dims[d] = dims.get(d, 0) + 1
        fails = sub_rep.failures()
        rep.add(label, not fails, "; ".join(f"{c.name}: {c.detail}" for c in fails[:3]))
    rep.add("dimension table", dims.get(32) == len(lambda0) and dims.get(128) == 8 + 8 * len(mus),
            str(dict(sorted((k, v) for k, v in dims.items() if k is not None))), dims)
    # the infinitesimal braidings are pairwise non-isomorphic
    from .yd import translate, yd_hom_dim
    members = list(lambda0) + [p for c in (3, 4, 5, 6) for p in LAMBDA_SETS[c]]
    ys = {p: translate(p) for p in members}
    clash = []
    for p, q in itertools.combinations(members, 2):
        if ys[p].dim == ys[q].dim and yd_hom_dim(ys[p], ys[q]) != 0:
            clash.append(f"{p}~{q}")
    rep.add("infinitesimal braidings pairwise non-isomorphic", not clash, ", ".join(clash[:3]))
    return rep.finish()


def _run_one(task):
    kind, arg = task
    if kind == "boson":
        return _job_boson(arg)
    return _job_lifting(*arg)


def _run_jobs(tasks, jobs):
    if jobs <= 1:
        return [_run_one(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(_run_one, tasks))
