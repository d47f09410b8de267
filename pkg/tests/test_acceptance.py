"""Acceptance criteria 1-11.

Each test records one line "criterion N: PASS|FAIL ...".  Where the stated
expectation disagrees with the exact computation, the failing sub-checks are
compared with the analysed set in KNOWN; an exact match is reported as an
expected failure, anything else fails the run.
"""
import itertools
import subprocess
import sys
import time

import pytest

from conftest import CRITERIA

# sub-checks that fail against the stated expectations, with the reason
KNOWN = {
    5: ({"radical = 112"},
        "rad(D) = 48; the 48 listed simples give 144 = 256 - 112 but 16 further "
        "two-dimensional simples (lambda_2 = +-1) exist, 48 + 144 + 64 = 256"),
    6: ({"character table (0, 1, 1)", "character table (0, 1, 3)",
         "character table (1, 1, 0)", "character table (1, 1, 2)"},
        "for j = 1 the braiding scalar is -(-1)^{i(k+1)}, not -(-1)^{(i+1)k}; "
        "it differs on four characters"),
    7: ({"displayed Lambda0 (1, 1, 0)", "displayed Lambda0 (1, 1, 2)"},
        "chi_{1,1,0} and chi_{1,1,2} have braiding +1, so B = k[v]; "
        "the finite characters are (0,1,1), (0,1,3) in their place"),
    9: ({"exterior (1, 1, 0) Hopf", "exterior (1, 1, 2) Hopf"},
        "k[v]/(v^2) is not a braided Hopf algebra when c(v (x) v) = v (x) v"),
    11: ({"theorem A exit 0", "theorem B exit 0"},
         "theorem A reports the character mismatches above; theorem B includes "
         "the two exterior algebras of criterion 9"),
}


class Sub:
    def __init__(self):
        self.items = []

    def __call__(self, name, ok, detail=""):
        self.items.append((name, bool(ok), detail))

    @property
    def failed(self):
        return {n for n, ok, _ in self.items if not ok}


def settle(n, sub, t0, limit=None, extra=""):
    elapsed = time.perf_counter() - t0
    if limit is not None:
        sub(f"runtime < {limit} s", elapsed < limit, f"{elapsed:.1f} s")
    failed = sub.failed
    detail = f"{len(sub.items) - len(failed)}/{len(sub.items)} checks, {elapsed:.1f} s"
    if failed:
        detail += "; failing: " + ", ".join(sorted(failed))
    status = "PASS" if not failed else "FAIL"
    known, why = KNOWN.get(n, (set(), ""))
    if failed and failed == known:
        detail += f" [analysed: {why}]"
    CRITERIA[n] = f"criterion {n:2d}: {status}  {detail}{extra}"
    print(CRITERIA[n])
    if not failed:
        return
    if failed == known:
        pytest.xfail(why)
    pytest.fail("unexpected failures: " + ", ".join(sorted(failed - known)) +
                ("; missing expected: " + ", ".join(sorted(known - failed)) if known - failed else ""))


def test_criterion_01_H():
    from hopfkit.presets import H_alg
    from hopfkit.hopf import verify_hopf_axioms
    t0, sub = time.perf_counter(), Sub()
    H = H_alg.__wrapped__()
    sub("dim 16", H.dim == 16)
    basis = {"1", "a", "a^2", "a^3", "d", "da", "da^2", "da^3", "b", "c",
             "ba", "ca", "ba^2", "ca^2", "ba^3", "ca^3"}
    sub("basis", set(H.basis) == basis)
    rep = verify_hopf_axioms(H, mode="full")
    sub("full axiom suite", rep.ok, rep.get("associativity").detail)
    settle(1, sub, t0, 10)


def test_criterion_02_psi():
    from hopfkit.presets import A_alg, Hdual, psi_matrix
    from hopfkit.hopf import hopf_morphism_check, grouplikes
    from hopfkit.linalg import rank
    t0, sub = time.perf_counter(), Sub()
    P = psi_matrix()
    sub("bijective", rank(P) == 16)
    sub("Hopf map", hopf_morphism_check(P, A_alg(), Hdual()).ok)
    sub("|G(H*)| = 8", len(grouplikes(Hdual())) == 8)
    settle(2, sub, t0)


def test_criterion_03_double():
    from hopfkit.double import double_of_H, verify_presentation
    from hopfkit.hopf import verify_hopf_axioms
    t0, sub = time.perf_counter(), Sub()
    D = double_of_H()
    sub("dim 256", D.dim == 256)
    sub("generator-complete axiom suite", verify_hopf_axioms(D.carrier, mode="generators", spot=2000).ok)
    rep = verify_presentation(D)
    sub("presentation relations", rep.ok, "; ".join(c.name for c in rep.failures()))
    settle(3, sub, t0, 300)


def test_criterion_04_simples(D):
    from hopfkit.rep import (LAMBDA, check_representation, dual_certificate, intertwiner_dim,
                             is_simple, simple_list)
    t0, sub = time.perf_counter(), Sub()
    mods = simple_list()
    sub("48 modules", len(mods) == 48)
    sub("relations hold", all(check_representation(m).ok for m in mods))
    sub("simple", all(is_simple(m) for m in mods))
    pairs = list(itertools.combinations(mods, 2))
    sub("1128 pairs Hom = 0", len(pairs) == 1128 and all(intertwiner_dim(m, n) == 0 for m, n in pairs))
    sub("End = k", all(intertwiner_dim(m, m) == 1 for m in mods))
    sub("32 dual certificates",
        all(dual_certificate(*p).get("phi invertible and intertwining").status == "pass" for p in LAMBDA))
    settle(4, sub, t0)


def test_criterion_05_radical(D):
    from hopfkit.hopf import radical_dim
    t0, sub = time.perf_counter(), Sub()
    r = radical_dim(D.carrier)
    sub("radical = 112", r == 112, f"computed {r}")
    settle(5, sub, t0, 600, extra=f"  (radical_dim = {r})")


def test_criterion_06_yd():
    from hopfkit.rep import LAMBDA
    from hopfkit.yd import (braiding, compare_closed_forms, expected_braiding, translate,
                            verify_braid_equation, verify_yd)
    t0, sub = time.perf_counter(), Sub()
    chars = [(i, j, k) for i in range(2) for j in range(2) for k in range(4)]
    mism = 0
    for p in chars + LAMBDA:
        y = translate(p)
        sub(f"YD {p}", verify_yd(y).ok)
        c = braiding(y)
        sub(f"braid equation {p}", verify_braid_equation(c, y.dim))
        if len(p) == 3:
            sub(f"character table {p}", c == expected_braiding(p))
        else:
            rep = compare_closed_forms(p, y)
            mism += sum(ch.status == "mismatch-logged" for ch in rep.checks)
            sub(f"closed forms {p} logged", all(ch.status != "fail" for ch in rep.checks))
    settle(6, sub, t0, extra=f"  ({mism} two-dimensional entries mismatch-logged)")


def test_criterion_07_nichols():
    from hopfkit.nichols import (LAMBDA0, LAMBDA_SETS, braided_space, check_relation_membership,
                                 classify, dual_infinite_certificate, eigenvalue_one_certificate,
                                 printed_relations)
    from hopfkit.yd import translate
    t0, sub = time.perf_counter(), Sub()
    for p in LAMBDA0:
        r = classify(p)
        sub(f"displayed Lambda0 {p}", r.verdict == "finite" and r.dims == [1, 1, 0] and r.total == 2,
            f"{r.verdict} {r.dims}")
    for c in (3, 4, 5, 6):
        for p in LAMBDA_SETS[c]:
            r = classify(p)
            sub(f"Lambda{c} {p} dims", r.dims == [1, 2, 2, 2, 1, 0] and r.total == 8 and r.palindromic)
            if c in (3, 4, 5):
                b = braided_space(translate(p))
                sub(f"Lambda{c} {p} relations", all(check_relation_membership(b, v) for v in printed_relations(p)))
    for p in LAMBDA_SETS[1]:
        r = classify(p)
        sub(f"Lambda1 {p} eigenvalue-one", r.kind == "eigenvalue-one" and r.dims[6] > 0)
    for p in LAMBDA_SETS[2]:
        q = dual_infinite_certificate(p)
        direct = q is not None and eigenvalue_one_certificate(braided_space(translate(q))) is not None
        r = classify(p)
        sub(f"Lambda2 {p} dual route", direct and r.verdict == "infinite" and r.dims[6] > 0)
    settle(7, sub, t0, 300)


def test_criterion_08_presented():
    from hopfkit.nichols import LAMBDA_SETS, braided_space, nichols_dims, presented_quotient_dims, printed_relations
    from hopfkit.yd import translate
    t0, sub = time.perf_counter(), Sub()
    for c in (3, 4, 5, 6):
        for p in LAMBDA_SETS[c]:
            b = braided_space(translate(p))
            want = nichols_dims(b, 6).dims
            got = presented_quotient_dims(b, printed_relations(p), 6)
            sub(f"{p}", got == want + [0] * (len(got) - len(want)), f"{got} vs {want}")
    settle(8, sub, t0)


def test_criterion_09_bosonizations():
    from hopfkit.boson import _job_boson
    from hopfkit.nichols import LAMBDA0, LAMBDA_SETS
    t0, sub = time.perf_counter(), Sub()
    for p in LAMBDA0:
        rep = _job_boson(p)
        sub(f"exterior {p} dim 32", rep.get("dimension").data == 32)
        sub(f"exterior {p} Hopf", rep.ok, "; ".join(c.name for c in rep.failures()[:2]))
    for c in (3, 4):
        for p in LAMBDA_SETS[c]:
            rep = _job_boson(p)
            sub(f"B(V){p}#H dim 128", rep.get("dimension").data == 128)
            sub(f"B(V){p}#H Hopf and probes", rep.ok, "; ".join(c.name for c in rep.failures()[:2]))
    settle(9, sub, t0)


def test_criterion_10_liftings():
    from hopfkit.boson import MU_SAMPLE, _job_lifting
    from hopfkit.nichols import LAMBDA_SETS
    t0, sub = time.perf_counter(), Sub()
    for f in (5, 6):
        for p in LAMBDA_SETS[f]:
            for mu in MU_SAMPLE:
                rep = _job_lifting(f, p, mu)
                sub(f"Lambda{f}{p} mu={mu}", rep.ok, "; ".join(c.name for c in rep.failures()[:2]))
                sub(f"Lambda{f}{p} mu={mu} coradical 12 / 16",
                    rep.get("coradical dimension").data == 12
                    and rep.get("subalgebra generated by the coradical").data == 16)
    settle(10, sub, t0, 900)


def test_criterion_11_end_to_end():
    t0, sub = time.perf_counter(), Sub()
    cmd = [sys.executable, "-m", "hopfkit.cli", "theorem"]
    a = subprocess.run(cmd + ["A", "--no-timing"], capture_output=True, text=True)
    sub("theorem A exit 0", a.returncode == 0, f"exit {a.returncode}")
    b = subprocess.run(cmd + ["B", "--no-timing", "--jobs", "4"], capture_output=True, text=True)
    sub("theorem B exit 0", b.returncode == 0, f"exit {b.returncode}")
    sub("no input errors", a.returncode in (0, 1) and b.returncode in (0, 1))
    settle(11, sub, t0, 1800)
