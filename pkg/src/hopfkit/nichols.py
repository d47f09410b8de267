"""Nichols algebras of braided vector spaces via quantum symmetrizers.

The degree-n part of B(V) is the image of the quantum symmetrizer
  S_n = sum_{s in S_n} T_s,  T_s = c_{i1} ... c_{il} for a reduced word of s,
acting on V^{(x) n} in the Kronecker basis (leftmost factor outermost).

Two constructions are provided: the explicit sum over permutations and the
factorisation S_n = (S_{n-1} (x) id)(1 + c_{n-1} + c_{n-1}c_{n-2} + ...),
which runs over distinguished coset representatives.  The second one is the
default; the first one serves as an independent check.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .hopf import roots_in_K
from .linalg import Matrix, kron, rank, kernel_basis, row_space_basis, vec_rank
from .scalar import ONE, ZERO, XI, fe, xi_pow

__all__ = [
    "BraidedVS", "NotABraiding", "DegreeTooLarge", "NicholsReport",
    "quantum_symmetrizer", "symmetrizer_explicit", "reduced_word", "lift",
    "matsumoto_check", "nichols_dims", "eigenvalue_one_certificate",
    "dual_infinite_certificate", "new_relations", "check_relation_membership",
    "presented_quotient_dims", "classify", "poly", "LAMBDA0", "LAMBDA_SETS",
    "lambda_class", "printed_relations", "braided_space", "MAX_DEGREE",
]

MAX_DEGREE = 8


class NotABraiding(ValueError):
    pass


class DegreeTooLarge(ValueError):
    pass


@dataclass
class BraidedVS:
    dim: int
    c: Matrix
    provenance: tuple | None = None

    def __post_init__(self):
        d = self.dim
        if self.c.rows != d * d or self.c.cols != d * d:
            raise NotABraiding(f"braiding must be {d * d}x{d * d}")

    def check(self) -> "BraidedVS":
        from .yd import verify_braid_equation
        if not verify_braid_equation(self.c, self.dim):
            raise NotABraiding("braid equation fails")
        if rank(self.c) != self.dim ** 2:
            raise NotABraiding("braiding is not invertible")
        return self


def braided_space(y, check: bool = True) -> BraidedVS:
    """The braided vector space underlying a YD module."""
    from .yd import braiding
    b = BraidedVS(y.dim, braiding(y), y.params)
    return b.check() if check else b


# ---------------------------------------------------------------------------
# symmetrizers
# ---------------------------------------------------------------------------

def _ci(b: BraidedVS, i: int, n: int) -> Matrix:
    """c acting on tensor positions i, i+1 (1-based) of V^{(x) n}."""
    d = b.dim
    left = Matrix.identity(d ** (i - 1))
    right = Matrix.identity(d ** (n - i - 1))
    return kron(kron(left, b.c), right)


def _cap(n):
    if n > MAX_DEGREE:
        raise DegreeTooLarge(f"degree {n} exceeds the cap {MAX_DEGREE}")


def reduced_word(perm, rightmost: bool = False) -> tuple:
    """A reduced word (i1, ..., il) with perm = s_{il} ... s_{i1}, found by
    bubble sorting at the leftmost (or rightmost) descent."""
    p = list(perm)
    out = []
    while True:
        desc = [i for i in range(len(p) - 1) if p[i] > p[i + 1]]
        if not desc:
            return tuple(out)
        i = desc[-1] if rightmost else desc[0]
        p[i], p[i + 1] = p[i + 1], p[i]
        out.append(i + 1)


def lift(b: BraidedVS, word, n: int, cache=None) -> Matrix:
    """T = c_{il} ... c_{i1} for the word (i1, ..., il)."""
    cache = cache if cache is not None else {}
    M = Matrix.identity(b.dim ** n)
    for i in word:
        ci = cache.get(i)
        if ci is None:
            ci = cache[i] = _ci(b, i, n)
        M = ci @ M
    return M


def symmetrizer_explicit(b: BraidedVS, n: int) -> Matrix:
    _cap(n)
    cache = {}
    N = b.dim ** n
    S = Matrix.zeros(N, N)
    for perm in itertools.permutations(range(n)):
        S = S + lift(b, reduced_word(perm), n, cache)
    return S


def quantum_symmetrizer(b: BraidedVS, n: int, _prev=None) -> Matrix:
    if n < 1:
        raise ValueError("n >= 1")
    _cap(n)
    if n == 1:
        return Matrix.identity(b.dim)
    prev = _prev if _prev is not None else quantum_symmetrizer(b, n - 1)
    N = b.dim ** n
    T = Matrix.identity(N)
    P = Matrix.identity(N)
    for k in range(n - 1, 0, -1):
        P = P @ _ci(b, k, n)
        T = T + P
    return kron(prev, Matrix.identity(b.dim)) @ T


def symmetrizers(b: BraidedVS, maxdeg: int) -> list:
    out = [Matrix.identity(1), Matrix.identity(b.dim)]
    for n in range(2, maxdeg + 1):
        out.append(quantum_symmetrizer(b, n, out[-1]))
    return out


def matsumoto_check(b: BraidedVS, n: int, samples: int | None = None, seed: int = 0) -> bool:
    """Leftmost- and rightmost-descent reduced words give the same lift."""
    perms = list(itertools.permutations(range(n)))
    if samples is not None and samples < len(perms):
        perms = random.Random(seed).sample(perms, samples)
    cache = {}
    for p in perms:
        w1, w2 = reduced_word(p), reduced_word(p, rightmost=True)
        if lift(b, w1, n, cache) != lift(b, w2, n, cache):
            return False
    return True


# ---------------------------------------------------------------------------
# graded dimensions and verdicts
# ---------------------------------------------------------------------------

@dataclass
class NicholsReport:
    dims: list
    verdict: str                      # "finite" | "infinite" | "unknown"
    total: int | None = None
    certificate: object = None
    kind: str = ""
    kernels: dict = field(default_factory=dict)

    @property
    def palindromic(self) -> bool:
        if self.verdict != "finite":
            return False
        top = max(i for i, x in enumerate(self.dims) if x)
        d = self.dims[:top + 1]
        return d == d[::-1]

    def to_dict(self):
        return {"dims": self.dims, "verdict": self.verdict, "total": self.total,
                "kind": self.kind,
                "certificate": _cert_str(self.certificate)}


def _cert_str(c):
    if c is None:
        return None
    if isinstance(c, (list, tuple)) and c and hasattr(c[0], "to_literal"):
        return [x.to_literal() for x in c]
    return list(c) if isinstance(c, tuple) else c


def nichols_dims(b: BraidedVS, maxdeg: int = 6, keep_kernels: bool = False) -> NicholsReport:
    if maxdeg < 2:
        raise ValueError("maxdeg >= 2")
    _cap(maxdeg)
    dims = [1, b.dim]
    kernels = {}
    S = Matrix.identity(b.dim)
    for n in range(2, maxdeg + 1):
        S = quantum_symmetrizer(b, n, S)
        r = rank(S)
        dims.append(r)
        if keep_kernels:
            kernels[n] = kernel_basis(S)
        if r == 0 and dims[-2] == 0:
            break
        if r == 0 and n == maxdeg:
            break
    zero = [i for i, x in enumerate(dims) if x == 0]
    if len(zero) >= 2 and zero[1] == zero[0] + 1:
        dims = dims[:zero[0] + 1]
        return NicholsReport(dims, "finite", sum(dims), kernels=kernels)
    if zero and zero[0] == len(dims) - 1:
        # single trailing zero: one more degree to confirm
        if maxdeg + 1 <= MAX_DEGREE:
            S = quantum_symmetrizer(b, len(dims), S)
            if rank(S) == 0:
                return NicholsReport(dims, "finite", sum(dims), kernels=kernels)
    cert = eigenvalue_one_certificate(b)
    if cert is not None:
        return NicholsReport(dims, "infinite", None, cert, "eigenvalue-one", kernels)
    return NicholsReport(dims, "unknown", None, kernels=kernels)


def eigenvalue_one_certificate(b: BraidedVS):
    """Nonzero v with c(v (x) v) = v (x) v, or None.  Basis vectors are tried
    first; in dimension 2 the full projective line over K is searched."""
    d = b.dim
    M = b.c - Matrix.identity(d * d)
    rows = [r for r in M.data if any(r)]

    def fixes(v):
        vv = [v[i] * v[j] for i in range(d) for j in range(d)]
        return all(not x for x in M @ vv)
    for i in range(d):
        v = [ONE if k == i else ZERO for k in range(d)]
        if fixes(v):
            return v
    if d != 2:
        return None
    # v = (1, t): each row gives alpha + beta t + gamma t^2 = 0
    polys = []
    for r in rows:
        alpha, beta, gamma = r[0], r[1] + r[2], r[3]
        if alpha or beta or gamma:
            polys.append([alpha, beta, gamma])
    if not polys:
        return [ONE, ZERO]
    for p in polys:
        coeffs = list(p)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if len(coeffs) <= 1:
            if coeffs:
                return None          # nonzero constant
            continue
        for t in roots_in_K(coeffs):
            v = [ONE, t]
            if fixes(v):
                return v
        return None
    return None


def dual_infinite_certificate(params):
    """For Lambda^2 members: the dual parameters (Remark-style index formula)
    when V* is YD-isomorphic to that module and it carries an eigenvalue-one
    certificate; None otherwise."""
    from .rep import dual_params
    from .yd import translate, dual_yd, yd_hom_dim
    if len(params) != 4 or tuple(params) not in LAMBDA_SETS[2]:
        return None
    q = dual_params(*params)
    y = translate(params)
    yq = translate(q)
    if yd_hom_dim(dual_yd(y), yq) != 1:
        return None
    if eigenvalue_one_certificate(braided_space(yq)) is None:
        return None
    return q


# ---------------------------------------------------------------------------
# relations
# ---------------------------------------------------------------------------

def poly(d: int, *terms) -> list:
    """poly(2, (1, '11'), (-XI, '21')) -> dense tensor v1v1 - xi v2v1 in V^{(x) 2}."""
    n = None
    out = None
    for c, word in terms:
        idx = [int(ch) - 1 for ch in word]
        if n is None:
            n = len(idx)
            out = [ZERO] * (d ** n)
        elif len(idx) != n:
            raise ValueError("inhomogeneous relation")
        pos = 0
        for i in idx:
            pos = pos * d + i
        out[pos] = out[pos] + fe(c)
    return out


def _degree(d: int, vec) -> int:
    n, N = 0, 1
    while N < len(vec):
        N *= d
        n += 1
    if N != len(vec):
        raise ValueError("tensor length is not a power of dim")
    return n


def _tensor_with_V(vecs, d, left: bool) -> list:
    out = []
    for v in vecs:
        for i in range(d):
            if left:      # e_i (x) v
                w = [ZERO] * (d * len(v))
                w[i * len(v):(i + 1) * len(v)] = v
            else:         # v (x) e_i
                w = [ZERO] * (d * len(v))
                for k, x in enumerate(v):
                    w[k * d + i] = x
            out.append(w)
    return out


def _ideal_part(d, lower, n_rel) -> list:
    """lower (x) V + V (x) lower, plus the given degree-n relations."""
    vecs = _tensor_with_V(lower, d, False) + _tensor_with_V(lower, d, True) + list(n_rel)
    vecs = [v for v in vecs if any(v)]
    return row_space_basis(vecs) if vecs else []


def new_relations(b: BraidedVS, n: int) -> list:
    """Basis of ker S_n modulo the ideal generated by ker S_k, k < n."""
    if n < 2:
        raise ValueError("n >= 2")
    d = b.dim
    Ss = symmetrizers(b, n)
    Kn = kernel_basis(Ss[n])
    Kprev = kernel_basis(Ss[n - 1]) if n > 2 else []
    J = _ideal_part(d, Kprev, [])
    base = vec_rank(J) if J else 0
    out = []
    cur = list(J)
    for v in Kn:
        if vec_rank(cur + [v]) > base:
            cur.append(v)
            base += 1
            out.append(v)
    return out


def check_relation_membership(b: BraidedVS, rel) -> bool:
    n = _degree(b.dim, rel)
    S = quantum_symmetrizer(b, n)
    return all(not x for x in S @ rel)


def presented_quotient_dims(b, relations: list, maxdeg: int) -> list:
    """Graded dimensions of T(V)/(relations) up to maxdeg."""
    d = b.dim if isinstance(b, BraidedVS) else int(b)
    by_deg = {}
    for r in relations:
        by_deg.setdefault(_degree(d, r), []).append(r)
    dims = [1]
    I = []
    for n in range(1, maxdeg + 1):
        I = _ideal_part(d, I, by_deg.get(n, [])) if n > 1 else [r for r in by_deg.get(1, []) if any(r)]
        if n == 1 and I:
            I = row_space_basis(I)
        dims.append(d ** n - (vec_rank(I) if I else 0))
    return dims


# ---------------------------------------------------------------------------
# the parameter sets
# ---------------------------------------------------------------------------

LAMBDA0 = [(1, 0, 1), (1, 0, 3), (0, 1, 0), (0, 1, 2), (1, 1, 0), (1, 1, 1), (1, 1, 2), (1, 1, 3)]
LAMBDA_SETS = {
    1: [(2, 1, 0, 0), (0, 1, 1, 0), (2, 3, 0, 0), (0, 3, 1, 0),
        (0, 1, 0, 1), (0, 1, 1, 1), (0, 3, 0, 1), (0, 3, 1, 1)],
    2: [(1, 3, 1, 1), (3, 3, 0, 1), (1, 1, 1, 1), (3, 1, 0, 1),
        (3, 3, 1, 0), (3, 3, 0, 0), (3, 1, 1, 0), (3, 1, 0, 0)],
    3: [(0, 1, 0, 0), (0, 3, 0, 0), (2, 1, 0, 1), (2, 3, 0, 1)],
    4: [(2, 1, 1, 0), (2, 1, 1, 1), (2, 3, 1, 0), (2, 3, 1, 1)],
    5: [(1, 3, 0, 1), (1, 3, 0, 0), (1, 1, 0, 1), (1, 1, 0, 0)],
    6: [(3, 3, 1, 1), (1, 3, 1, 0), (3, 1, 1, 1), (1, 1, 1, 0)],
}


def lambda_class(params) -> int | None:
    params = tuple(params)
    if len(params) == 3:
        return 0 if params in LAMBDA0 else None
    for k, members in LAMBDA_SETS.items():
        if params in members:
            return k
    return None


def printed_relations(params, variant: str = "statement") -> list:
    """The defining relations as printed for the finite classes 3-6.
    variant="proof" selects the relations derived in the proof for class 6."""
    from .rep import lambdas
    cls = lambda_class(params)
    i, j, k, l = params
    l1, l2, l3, l4 = lambdas(i, j, k, l)
    xj = xi_pow(j)
    if cls == 3:
        return [poly(2, (1, "11")), poly(2, (1, "12"), (-xj, "21")), poly(2, (1, "2222"))]
    if cls == 4:
        return [poly(2, (1, "11")), poly(2, (1, "12"), (xj, "21")), poly(2, (1, "2222"))]
    if cls == 5 or (cls == 6 and variant == "statement"):
        return [poly(2, (1, "1111")), poly(2, (1, "12"), (l4, "21")),
                poly(2, (1, "11"), (2 * l4, "22"))]
    if cls == 6:
        return [poly(2, (1, "1111")), poly(2, (1, "12"), (-(l1 * XI) ** j, "21")),
                poly(2, (1, "11"), (-2 * xj * l1 ** j, "22"))]
    raise ValueError(f"{params} is not in a finite class")


def classify(params, maxdeg: int = 6) -> NicholsReport:
    from .yd import translate
    b = braided_space(translate(tuple(params)))
    rep = nichols_dims(b, maxdeg)
    if rep.verdict == "unknown" and len(params) == 4:
        q = dual_infinite_certificate(tuple(params))
        if q is not None:
            rep.verdict, rep.kind, rep.certificate = "infinite", "dual", q
    return rep
