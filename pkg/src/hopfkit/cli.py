"""hopfkit command line.

Every command assembles a Report; the exit code is 0 when no check failed,
1 on a failed check and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from .report import Report
from .scalar import ParseError, parse_literal, format_literal

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------

def parse_params(text: str) -> tuple:
    from .rep import LAMBDA
    try:
        t = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"parameters must be integers, got {text!r}") from None
    if len(t) == 3:
        i, j, k = t
        if not (0 <= i < 2 and 0 <= j < 2 and 0 <= k < 4):
            raise InputError(f"character parameters out of range: {t}")
        return t
    if len(t) == 4:
        if t not in LAMBDA:
            raise InputError(f"{t} is not a parameter of a two-dimensional simple module")
        return t
    raise InputError("expected i,j,k or i,j,k,iota")


def parse_mu(text: str):
    try:
        return parse_literal(text)
    except (ParseError, ZeroDivisionError) as e:
        raise InputError(f"bad literal {text!r}: {e}") from None


def _mat(M) -> list:
    return [[format_literal(x) for x in row] for row in M.data]


def _preset(name: str):
    from . import presets
    table = {"H": presets.H_alg, "A": presets.A_alg, "G": presets.G_alg, "Hdual": presets.Hdual}
    if name == "D":
        from .double import the_double
        return the_double().carrier
    if name not in table:
        raise InputError(f"unknown preset {name!r}")
    return table[name]()


def _load_or_preset(args):
    from .serialize import load
    if getattr(args, "in_path", None):
        return load(args.in_path)
    if getattr(args, "preset", None):
        return _preset(args.preset)
    raise InputError("give --in FILE or --preset NAME")


# ---------------------------------------------------------------------------
# commands; each returns (Report, result payload or None)
# ---------------------------------------------------------------------------

def cmd_build(args):
    from .hopf import verify_hopf_axioms
    from .serialize import dump
    rep = Report(f"build {args.preset}")
    h = _preset(args.preset)
    rep.add("dimension", True, str(h.dim), h.dim)
    rep.extend(verify_hopf_axioms(h))
    if args.out:
        dump(h, args.out)
        rep.add("written", True, args.out)
    return rep.finish(), {"dim": h.dim, "basis": list(h.basis)}


def cmd_double(args):
    from .hopf import verify_hopf_axioms
    from .serialize import dump
    from .double import the_double
    rep = Report("double")
    D = the_double()
    rep.add("dimension 256", D.dim == 256, str(D.dim))
    rep.extend(verify_hopf_axioms(D.carrier, mode="generators"))
    if args.out:
        dump(D.carrier, args.out)
        rep.add("written", True, args.out)
    return rep.finish(), {"dim": D.dim}


def cmd_verify(args):
    from .hopf import verify_hopf_axioms
    if args.what == "hopf":
        h = _load_or_preset(args)
        mode = "full" if args.full else "auto"
        return verify_hopf_axioms(h, mode=mode), {"dim": h.dim}
    from .double import the_double, verify_presentation
    from .hopf import verify_hopf_axioms as v
    rep = Report("double presentation")
    D = the_double()
    rep.add("dimension 256", D.dim == 256, str(D.dim))
    rep.extend(v(D.carrier, mode="generators"), "hopf: ")
    rep.extend(verify_presentation(D))
    return rep.finish(), None


def cmd_simples(args):
    from .rep import simple_list, verify_simple_list, check_representation, dual_certificate, LAMBDA
    mods = simple_list()
    if args.what == "list":
        rep = Report("simple modules")
        rep.add("count", len(mods) == 48, str(len(mods)))
        return rep.finish(), [{"params": list(m.params), "dim": m.dim, "label": m.label} for m in mods]
    rep = Report("simple modules")
    for m in mods:
        r = check_representation(m)
        rep.add(f"{m.label} relations", r.ok, "; ".join(c.name for c in r.failures()))
    rep.extend(verify_simple_list(mods, pairwise=args.pairwise))
    for p in LAMBDA:
        r = dual_certificate(*p)
        for c in r.checks:
            rep.checks.append(type(c)(f"dual {p}: {c.name}", c.status, c.detail))
    return rep.finish(), None


def cmd_radical(args):
    from .hopf import radical_dim
    rep = Report(f"radical of {args.target}")
    h = _preset(args.target)
    r = radical_dim(h)
    rep.add("radical dimension", True, str(r), r)
    rep.add("semisimple quotient dimension", True, str(h.dim - r), h.dim - r)
    if args.target == "D":
        rep.add("radical = 112 (256 - 144 from 16 characters and 32 two-dimensional simples)", r == 112, f"computed {r}")
    return rep.finish(), {"radical_dim": r, "quotient_dim": h.dim - r}


def cmd_yd(args):
    from .yd import translate, verify_yd, braiding, verify_braid_equation, compare_closed_forms
    p = parse_params(args.module)
    y = translate(p)
    if args.what == "translate":
        rep = verify_yd(y)
        return rep, {"params": list(p), "dim": y.dim,
                     "coaction": {y.hopf.basis[m]: _mat(C) for m, C in enumerate(y.coaction)
                                  if not C.is_zero()}}
    c = braiding(y)
    rep = Report(f"braiding {p}")
    rep.add("braid equation", verify_braid_equation(c, y.dim))
    if args.check_paper:
        rep.extend(compare_closed_forms(p, y))
    return rep.finish(), {"params": list(p), "braiding": _mat(c)}


def _all_params():
    from .rep import LAMBDA
    return [(i, j, k) for i in range(2) for j in range(2) for k in range(4)] + list(LAMBDA)


def cmd_nichols(args):
    from .nichols import classify, nichols_dims, braided_space, new_relations, \
        printed_relations, check_relation_membership, lambda_class, MAX_DEGREE
    from .yd import translate
    if args.max_degree > MAX_DEGREE or args.max_degree < 2:
        raise InputError(f"--max-degree must lie in 2..{MAX_DEGREE}")
    if args.what == "dims":
        p = parse_params(args.module)
        rep = Report(f"Nichols dims {p}")
        r = nichols_dims(braided_space(translate(p)), args.max_degree)
        rep.add("verdict", True, r.verdict)
        return rep.finish(), {"params": list(p), **r.to_dict()}
    if args.what == "classify":
        params = _all_params() if args.all or not args.module else [parse_params(args.module)]
        rep = Report("Nichols classification")
        out = []
        for p in params:
            r = classify(p, args.max_degree)
            rep.add(f"{p}", r.verdict != "unknown", f"{r.verdict} {r.dims}")
            out.append({"params": list(p), "class": lambda_class(p), **r.to_dict()})
        return rep.finish(), out
    p = parse_params(args.module)
    rep = Report(f"relations {p} degree {args.degree}")
    b = braided_space(translate(p))
    rels = new_relations(b, args.degree)
    rep.add("new relations", True, str(len(rels)), len(rels))
    if lambda_class(p) in (3, 4, 5, 6):
        for t, rel in enumerate(printed_relations(p)):
            if len(rel) == b.dim ** args.degree:
                rep.add(f"displayed relation {t + 1} in the kernel", check_relation_membership(b, rel))
    return rep.finish(), {"params": list(p), "degree": args.degree,
                          "relations": [[format_literal(x) for x in v] for v in rels]}


def cmd_boson(args):
    from .boson import bosonization, projection_check
    from .hopf import verify_hopf_axioms
    from .serialize import dump
    p = parse_params(args.module)
    rep = Report(f"bosonization {p}")
    B = bosonization(p)
    rep.add("dimension", True, str(B.dim), B.dim)
    rep.extend(B.braided.checks, "R: ")
    rep.extend(verify_hopf_axioms(B, mode="generators"), "hopf: ")
    rep.extend(projection_check(B))
    if args.out:
        dump(B, args.out)
        rep.add("written", True, args.out)
    return rep.finish(), {"dim": B.dim}


def cmd_lifting(args):
    from .boson import build_lifting, verify_lifting, compare_with_bosonization
    from .serialize import dump
    p = parse_params(args.params)
    from .nichols import LAMBDA_SETS
    if p not in LAMBDA_SETS.get(args.family, []):
        raise InputError(f"{p} is not in class {args.family}")
    mu = parse_mu(args.mu)
    L = build_lifting(args.family, p, mu, args.variant)
    if args.what == "build":
        rep = Report(f"lifting {args.family} {p} mu={format_literal(mu)}")
        rep.add("dimension 128", L.dim == 128, str(L.dim))
        if args.out:
            dump(L.carrier, args.out)
            rep.add("written", True, args.out)
        return rep.finish(), {"dim": L.dim}
    rep = verify_lifting(L)
    if not mu:
        rep.extend(compare_with_bosonization(L), "mu=0: ")
    return rep, None


def theorem_a_report(maxdeg: int = 6) -> Report:
    from .nichols import classify, lambda_class, LAMBDA0
    rep = Report("Theorem A")
    finite_chars = []
    for p in _all_params():
        r = classify(p, maxdeg)
        cls = lambda_class(p)
        if len(p) == 3:
            if cls == 0:
                ok = r.verdict == "finite" and r.dims == [1, 1, 0] and r.total == 2
                want = "finite, dims (1,1,0)"
            else:
                ok = r.verdict == "infinite"
                want = "infinite"
            if r.verdict == "finite":
                finite_chars.append(p)
        elif cls in (3, 4, 5, 6):
            ok = r.verdict == "finite" and r.dims == [1, 2, 2, 2, 1, 0] and r.total == 8 and r.palindromic
            want = "finite, dims (1,2,2,2,1,0)"
        else:
            ok = r.verdict == "infinite" and len(r.dims) > 6 and r.dims[6] > 0
            want = "infinite, degree-6 rank > 0"
        rep.add(f"{p} class {cls if cls is not None else '-'}", ok,
                f"expected {want}; got {r.verdict} {r.dims}" + (f" ({r.kind})" if r.kind else ""))
    rep.add("finite characters (computed)", True, " ".join(str(p) for p in finite_chars),
            [list(p) for p in finite_chars])
    missing = sorted(set(LAMBDA0) - set(finite_chars))
    extra = sorted(set(finite_chars) - set(LAMBDA0))
    rep.add("finite characters agree with the displayed list", not missing and not extra,
            f"displayed but infinite: {missing}; finite but not displayed: {extra}"
            if missing or extra else "")
    return rep.finish()


def cmd_theorem(args):
    if args.which == "A":
        return theorem_a_report(args.max_degree), None
    from .boson import theorem_b_suite, MU_SAMPLE
    mus = MU_SAMPLE if not args.mu else tuple(parse_mu(x) for x in args.mu.split(","))
    return theorem_b_suite(mus=mus, jobs=args.jobs), None


def cmd_export(args):
    from .serialize import dump
    h = _load_or_preset(args)
    if not args.out:
        raise InputError("export needs --out")
    dump(h, args.out)
    rep = Report("export")
    rep.add("written", True, f"{args.out} (dim {h.dim})")
    return rep.finish(), {"dim": h.dim}


def cmd_import(args):
    from .serialize import load, to_dict, from_dict, same_structure
    from .hopf import verify_hopf_axioms
    if not args.in_path:
        raise InputError("import needs --in")
    rep = Report("import")
    h = load(args.in_path)
    rep.add("schema", True, f"dim {h.dim}")
    rep.add("round trip", same_structure(h, from_dict(json.loads(json.dumps(to_dict(h))))))
    if args.verify:
        rep.extend(verify_hopf_axioms(h))
    return rep.finish(), {"dim": h.dim}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--no-timing", action="store_true")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out")
    common.add_argument("--in", dest="in_path")

    p = argparse.ArgumentParser(prog="hopfkit", description="Exact verification of Hopf algebras "
                                "of dimension 16, 32 and 128 over a non-pointed H.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build", parents=[common])
    s.add_argument("--preset", required=True, choices=["H", "A", "G", "Hdual", "D"])
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("double", parents=[common])
    s.set_defaults(func=cmd_double)

    s = sub.add_parser("verify", parents=[common])
    s.add_argument("what", choices=["hopf", "double-presentation"])
    s.add_argument("--preset", choices=["H", "A", "G", "Hdual", "D"])
    s.add_argument("--full", action="store_true", help="all basis triples")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("simples", parents=[common])
    s.add_argument("what", choices=["list", "verify"])
    s.add_argument("--pairwise", action="store_true")
    s.set_defaults(func=cmd_simples)

    s = sub.add_parser("radical", parents=[common])
    s.add_argument("--target", default="D", choices=["H", "A", "G", "Hdual", "D"])
    s.set_defaults(func=cmd_radical)

    s = sub.add_parser("yd", parents=[common])
    s.add_argument("what", choices=["translate", "braiding"])
    s.add_argument("--module", required=True)
    s.add_argument("--check-paper", action="store_true")
    s.set_defaults(func=cmd_yd)

    s = sub.add_parser("nichols", parents=[common])
    s.add_argument("what", choices=["dims", "classify", "relations"])
    s.add_argument("--module")
    s.add_argument("--all", action="store_true")
    s.add_argument("--max-degree", type=int, default=6)
    s.add_argument("--degree", type=int, default=2)
    s.set_defaults(func=cmd_nichols)

    s = sub.add_parser("boson", parents=[common])
    s.add_argument("what", choices=["build"])
    s.add_argument("--module", required=True)
    s.set_defaults(func=cmd_boson)

    s = sub.add_parser("lifting", parents=[common])
    s.add_argument("what", choices=["build", "verify"])
    s.add_argument("--family", type=int, choices=[5, 6], required=True)
    s.add_argument("--params", required=True)
    s.add_argument("--mu", default="0")
    s.add_argument("--variant", choices=["corrected", "printed"], default="corrected")
    s.set_defaults(func=cmd_lifting)

    s = sub.add_parser("theorem", parents=[common])
    s.add_argument("which", choices=["A", "B"])
    s.add_argument("--max-degree", type=int, default=6)
    s.add_argument("--mu", help="comma separated literals (default 0,1,-1,sqrt2)")
    s.set_defaults(func=cmd_theorem)

    s = sub.add_parser("export", parents=[common])
    s.add_argument("--preset", choices=["H", "A", "G", "Hdual", "D"])
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("import", parents=[common])
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_import)
    return p


def _emit(rep: Report, payload, fmt: str, timing: bool, stream):
    if fmt == "json":
        d = rep.to_dict(timing)
        if payload is not None:
            d["result"] = payload
        stream.write(json.dumps(d, indent=2, default=str) + "\n")
    else:
        stream.write(rep.to_text(timing) + "\n")


def main(argv=None) -> int:
    from .serialize import SchemaError
    from .rep import ParameterOutOfRange
    from .nichols import DegreeTooLarge
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep, payload = args.func(args)
    except (InputError, SchemaError, ParameterOutOfRange, DegreeTooLarge, FileNotFoundError) as e:
        sys.stderr.write(f"hopfkit: error: {e}\n")
        return EXIT_INPUT
    _emit(rep, payload, args.format, not args.no_timing, sys.stdout)
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
