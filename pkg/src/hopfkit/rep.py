"""Finite-dimensional left modules over a FinHopf given by generator matrices.

An AlgModule stores the matrices of the algebra generators.  Relations are
checked as matrix identities when the module is built; the action of an
arbitrary basis element is then read off the carrier's generator-word
expressions (gen_words), so that ``act(i)`` is defined for every e_i.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .hopf import FinHopf, radical_dim, sqrt_in_K
from .linalg import Matrix, kernel_basis, vec_rank
from .report import Report, PASS, MISMATCH
from .scalar import ONE, ZERO, XI, SQRT2, HALF, fe, xi_pow

__all__ = [
    "AlgModule", "RelationViolated", "ParameterOutOfRange", "UnsupportedDimension",
    "module_from_generators", "relations_of", "one_dim_module", "two_dim_module",
    "is_simple", "is_simple_eigen", "intertwiner_dim", "intertwiners", "dual_module",
    "dual_params", "dual_certificate", "simple_list", "extra_simples", "LAMBDA",
    "A_modules", "direct_sum", "radical_dim", "check_representation",
    "verify_simple_list", "lambdas",
]


class RelationViolated(ValueError):
    def __init__(self, relation, detail=""):
        super().__init__(f"relation {relation} violated{': ' + detail if detail else ''}")
        self.relation = relation


class ParameterOutOfRange(ValueError):
    pass


class UnsupportedDimension(ValueError):
    pass


@dataclass
class AlgModule:
    algebra: FinHopf
    dim: int
    gens: dict                      # generator name -> Matrix
    label: str = ""
    params: tuple | None = None
    _full: dict = field(default_factory=dict, repr=False)

    def word(self, letters) -> Matrix:
        M = Matrix.identity(self.dim)
        for g in letters:
            M = M @ self.gens[g]
        return M

    def combo(self, comb: dict) -> Matrix:
        M = Matrix.zeros(self.dim, self.dim)
        for word, c in comb.items():
            M = M + self.word(word).scale(c)
        return M

    def act(self, i: int) -> Matrix:
        """Matrix of the basis element e_i."""
        hit = self._full.get(i)
        if hit is None:
            gw = self.algebra.gen_words
            if gw is None:
                raise ValueError(f"{self.algebra.name} has no generator-word expressions")
            hit = self.combo(gw[i])
            self._full[i] = hit
        return hit

    def act_vec(self, vec: dict) -> Matrix:
        M = Matrix.zeros(self.dim, self.dim)
        for i, c in vec.items():
            M = M + self.act(i).scale(c)
        return M

    def full_action(self) -> list:
        return [self.act(i) for i in range(self.algebra.dim)]

    def __repr__(self):
        return f"AlgModule({self.label or '?'}, dim={self.dim})"


def relations_of(alg: FinHopf) -> dict:
    """name -> [(coeff, word), ...] evaluating to zero in alg."""
    rels = getattr(alg, "relations", None)
    if rels:
        return rels
    rw = alg.rewriter
    if rw is None:
        return {}
    out = {}
    for lhs, rhs in rw.rules.items():
        name = "".join(lhs) + "=" + (" + ".join(f"({c})" + ("".join(x) or "1") for x, c in rhs.items()) or "0")
        out[name] = [(ONE, lhs)] + [(-c, x) for x, c in rhs.items()]
    return out


def _eval_relation(gens: dict, dim: int, terms) -> Matrix:
    M = Matrix.zeros(dim, dim)
    for c, word in terms:
        W = Matrix.identity(dim)
        for g in word:
            W = W @ gens[g]
        M = M + W.scale(fe(c))
    return M


def module_from_generators(alg: FinHopf, assignment: dict, label: str = "",
                           params=None, check: bool = True) -> AlgModule:
    gens = {}
    dim = None
    for g, M in assignment.items():
        if not isinstance(M, Matrix):
            M = Matrix(M)
        if M.rows != M.cols:
            raise ValueError(f"matrix for {g} is not square")
        if dim is None:
            dim = M.rows
        elif M.rows != dim:
            raise ValueError(f"matrix for {g} has size {M.rows}, expected {dim}")
        gens[g] = M
    missing = set(alg.generators) - set(gens)
    if missing:
        raise ValueError(f"no matrix for generators {sorted(missing)}")
    if check:
        for name, terms in relations_of(alg).items():
            if not _eval_relation(gens, dim, terms).is_zero():
                raise RelationViolated(name)
    return AlgModule(alg, dim, gens, label, params)


def check_representation(m: AlgModule) -> Report:
    """rho(g) rho(e_k) = rho(g e_k) for all generators g and basis elements e_k,
    and rho(1) = 1: the completed action really is an algebra map."""
    A = m.algebra
    rep = Report(f"representation {m.label}")
    rep.add("unit acts as identity", m.act_vec(A.unit) == Matrix.identity(m.dim))
    bad = []
    for g, gv in A.generators.items():
        if m.act_vec(gv) != m.gens[g]:
            bad.append(f"{g} (generator vector)")
        for k in range(A.dim):
            lhs = m.gens[g] @ m.act(k)
            rhs = m.act_vec(A.mul(gv, {k: ONE}))
            if lhs != rhs:
                bad.append(f"{g}*e_{k}")
                break
    rep.add("action is multiplicative", not bad, ", ".join(bad[:4]))
    return rep.finish()


def direct_sum(m: AlgModule, n: AlgModule) -> AlgModule:
    d = m.dim + n.dim
    gens = {}
    for g in m.gens:
        M = Matrix.zeros(d, d)
        for i in range(m.dim):
            for j in range(m.dim):
                M.data[i][j] = m.gens[g].data[i][j]
        for i in range(n.dim):
            for j in range(n.dim):
                M.data[m.dim + i][m.dim + j] = n.gens[g].data[i][j]
        gens[g] = M
    return AlgModule(m.algebra, d, gens, f"{m.label}+{n.label}")


# ---------------------------------------------------------------------------
# simplicity and intertwiners
# ---------------------------------------------------------------------------

def _span_rank(m: AlgModule) -> int:
    vecs = []
    for M in m.full_action():
        vecs.append([x for row in M.data for x in row])
    return vec_rank(vecs)


def is_simple(m: AlgModule, method: str = "burnside") -> bool:
    """Absolute simplicity.  Burnside: the image of the algebra is all of
    End(V), i.e. the action matrices span a space of dimension dim^2."""
    if m.dim == 0:
        return False
    if method == "eigen":
        return is_simple_eigen(m)
    if method != "burnside":
        raise ValueError(method)
    return _span_rank(m) == m.dim * m.dim


def _eigenlines(M: Matrix):
    """Eigenvector lines of a 2x2 matrix over K, or None if some eigenvalue
    lies outside K."""
    a, b = M.data[0]
    c, d = M.data[1]
    tr, det = a + d, a * d - b * c
    disc = tr * tr - det * 4
    r = sqrt_in_K(disc)
    if r is None:
        return None
    lines = []
    for lam in {(tr + r) * HALF, (tr - r) * HALF}:
        ker = kernel_basis([[a - lam, b], [c, d - lam]], 2)
        lines.extend(ker)
    return lines


def is_simple_eigen(m: AlgModule) -> bool:
    """dim <= 2: simple iff the generator matrices have no common eigenvector."""
    if m.dim == 1:
        return True
    if m.dim != 2:
        raise UnsupportedDimension(f"eigenvector test needs dim <= 2, got {m.dim}")
    mats = list(m.gens.values())
    for M in mats:
        if M.data[0][1] or M.data[1][0] or M.data[0][0] != M.data[1][1]:
            lines = _eigenlines(M)
            if lines is None:
                raise UnsupportedDimension("eigenvalues outside the coefficient field")
            for v in lines:
                common = True
                for N in mats:
                    u = N @ v
                    # u parallel to v
                    if u[0] * v[1] - u[1] * v[0]:
                        common = False
                        break
                if common:
                    return False
            return True
    return False          # every generator is scalar


def intertwiners(m: AlgModule, n: AlgModule) -> list:
    """Basis of Hom_alg(m, n) as n.dim x m.dim matrices."""
    p, q = n.dim, m.dim
    rows = []
    for g in m.gens:
        A, B = m.gens[g].data, n.gens[g].data
        # (T A - B T)_{rc} = sum_k T_{rk} A_{kc} - sum_k B_{rk} T_{kc}
        for r in range(p):
            for c in range(q):
                row = [ZERO] * (p * q)
                for k in range(q):
                    if A[k][c]:
                        row[r * q + k] = row[r * q + k] + A[k][c]
                for k in range(p):
                    if B[r][k]:
                        row[k * q + c] = row[k * q + c] - B[r][k]
                if any(row):
                    rows.append(row)
    ker = kernel_basis(rows, p * q) if rows else kernel_basis([], p * q)
    return [Matrix._wrap([v[r * q:(r + 1) * q] for r in range(p)], p, q) for v in ker]


def intertwiner_dim(m: AlgModule, n: AlgModule) -> int:
    if m.algebra is not n.algebra:
        raise ValueError("modules over different algebras")
    return len(intertwiners(m, n))


def is_intertwiner(T: Matrix, m: AlgModule, n: AlgModule) -> bool:
    return all(T @ m.gens[g] == n.gens[g] @ T for g in m.gens)


# ---------------------------------------------------------------------------
# duals
# ---------------------------------------------------------------------------

def dual_module(m: AlgModule) -> AlgModule:
    """(h . f)(v) = f(S(h) v): on the dual basis rho*(h) = rho(S(h))^T."""
    A = m.algebra
    gens = {}
    for g, gv in A.generators.items():
        gens[g] = m.act_vec(A.S(gv)).T
    return AlgModule(A, m.dim, gens, f"({m.label})*")


# ---------------------------------------------------------------------------
# the modules over the double
# ---------------------------------------------------------------------------

LAMBDA = [(i, j, k, l) for i in range(4) for j in (1, 3) for k in range(2) for l in range(2)]


def _double_carrier():
    from .double import the_double
    return the_double().carrier


def lambdas(i, j, k, l):
    return xi_pow(i), xi_pow(j), fe(-1) ** k, fe(-1) ** l


def one_dim_module(i: int, j: int, k: int, alg: FinHopf | None = None) -> AlgModule:
    if not (0 <= i < 2 and 0 <= j < 2 and 0 <= k < 4):
        raise ParameterOutOfRange(f"chi_({i},{j},{k})")
    alg = alg or _double_carrier()
    s = fe(-1)
    vals = {"g": s ** i, "h": s ** j, "x": ZERO, "a": xi_pow(k), "b": ZERO, "c": ZERO,
            "d": s ** i * s ** j * xi_pow(k)}
    return module_from_generators(alg, {g: Matrix([[v]]) for g, v in vals.items()},
                                  label=f"chi_{i}{j}{k}", params=(i, j, k))


def _two_dim_matrices(i, j, k, l):
    l1, l2, l3, l4 = lambdas(i, j, k, l)
    x2 = SQRT2 * HALF * XI * l1 ** 3 * (l2 * l3 - l4)
    x3 = SQRT2 * XI * l1 * (l2 * l3 + l4)
    return {
        "a": Matrix.diag([-l4 * l1, XI * l4 * l1]),
        "d": Matrix.diag([l1, XI * l1]),
        "b": Matrix([[0, l4], [0, 0]]),
        "c": Matrix([[0, 1], [0, 0]]),
        "g": Matrix.diag([l2, l2]),
        "h": Matrix.diag([l3, -l3]),
        "x": Matrix([[0, x2], [x3, 0]]),
    }


def two_dim_module(i: int, j: int, k: int, l: int, alg: FinHopf | None = None,
                   any_j: bool = False, check: bool = True) -> AlgModule:
    """V_{i,j,k,l} with the displayed action.  any_j admits j in {0, 2}, which
    lies outside Lambda (used for the analysis of the extra simples)."""
    okj = j in (1, 3) or (any_j and j in (0, 2))
    if not (0 <= i < 4 and okj and 0 <= k < 2 and 0 <= l < 2):
        raise ParameterOutOfRange(f"V_({i},{j},{k},{l})")
    alg = alg or _double_carrier()
    return module_from_generators(alg, _two_dim_matrices(i, j, k, l),
                                  label=f"V_{i}{j}{k}{l}", params=(i, j, k, l), check=check)


def dual_params(i, j, k, l):
    return ((-i - 1) % 4, (-j) % 4, (k + 1) % 2, (l + 1) % 2)


def dual_certificate(i, j, k, l) -> Report:
    """V*_{ijkl} ~ V_{dual params}.  The map w1 -> t f2, w2 -> f1 intertwines
    for t = -xi l1^2 l4; the value t = xi l1^2 l4 is checked as well and a
    failure there is logged as a mismatch, not an error."""
    V = two_dim_module(i, j, k, l)
    W = two_dim_module(*dual_params(i, j, k, l))
    Vd = dual_module(V)
    l1, _, _, l4 = lambdas(i, j, k, l)
    t = XI * l1 * l1 * l4
    phi = Matrix([[0, 1], [-t, 0]])          # columns: images of w1, w2
    printed = Matrix([[0, 1], [t, 0]])
    rep = Report(f"dual of V_{i}{j}{k}{l}")
    rep.add("phi invertible and intertwining", is_intertwiner(phi, W, Vd),
            f"w1 -> {(-t).to_literal()} f2, w2 -> f1")
    rep.add("Hom(W, V*) is one-dimensional", len(intertwiners(W, Vd)) == 1)
    rep.add("w1 -> xi l1^2 l4 f2 variant", PASS if is_intertwiner(printed, W, Vd) else MISMATCH,
            "off by the sign of the f2 coefficient")
    return rep.finish()


def simple_list(alg: FinHopf | None = None) -> list:
    alg = alg or _double_carrier()
    out = [one_dim_module(i, j, k, alg) for i in range(2) for j in range(2) for k in range(4)]
    out += [two_dim_module(*p, alg=alg) for p in LAMBDA]
    return out


def extra_simples(alg: FinHopf | None = None) -> list:
    """Two-dimensional modules with lambda_2 = +-1 and lambda_2 lambda_3 = lambda_4.
    The displayed matrices still satisfy every relation and x is lower
    triangular while b, c are upper triangular, so these are simple too."""
    alg = alg or _double_carrier()
    out = []
    for i in range(4):
        for j in (0, 2):
            for k in range(2):
                for l in range(2):
                    l2, l3, l4 = xi_pow(j), fe(-1) ** k, fe(-1) ** l
                    if l2 * l3 == l4:
                        out.append(two_dim_module(i, j, k, l, alg=alg, any_j=True))
    return out


def verify_simple_list(mods: list, pairwise: bool = True) -> Report:
    rep = Report("simple modules")
    for m in mods:
        rep.add(f"{m.label} simple", is_simple(m))
        if pairwise:
            rep.add(f"{m.label} End dim 1", intertwiner_dim(m, m) == 1)
    if pairwise:
        bad = []
        for m, n in combinations(mods, 2):
            if m.dim == n.dim and intertwiner_dim(m, n):
                bad.append(f"{m.label}~{n.label}")
        # modules of different dimension are trivially non-isomorphic
        rep.add(f"{len(mods) * (len(mods) - 1) // 2} distinct pairs non-isomorphic", not bad,
                ", ".join(bad[:6]))
    rep.add("sum of squared dimensions", True, str(sum(m.dim ** 2 for m in mods)),
            data=sum(m.dim ** 2 for m in mods))
    return rep.finish()


# ---------------------------------------------------------------------------
# modules over A
# ---------------------------------------------------------------------------

def A_modules(alg: FinHopf | None = None) -> list:
    """Four characters and two two-dimensional simples of A."""
    from .presets import A_alg
    alg = alg or A_alg()
    s = fe(-1)
    out = []
    for i in range(2):
        for j in range(2):
            out.append(module_from_generators(
                alg, {"g": Matrix([[s ** i]]), "h": Matrix([[s ** j]]), "x": Matrix([[0]])},
                label=f"chi_{i}{j}", params=(i, j)))
    for n, gval in ((1, XI), (2, -XI)):
        out.append(module_from_generators(
            alg, {"g": Matrix.diag([gval, gval]), "h": Matrix.diag([1, -1]),
                  "x": Matrix([[0, SQRT2], [SQRT2, 0]])},
            label=f"rho_{n}", params=(n,)))
    return out
