"""JSON interchange for FinHopf values.

{"dim": n, "basis": [...], "mult": [[i, j, [[k, lit], ...]], ...],
 "comult": [[i, [[j, k, lit], ...]], ...], "counit": [lit, ...],
 "antipode": [[lit, ...], ...]}

Only nonzero products are listed in "mult".  Scalars are field literals.
"""
from __future__ import annotations

import json

from .hopf import FinHopf
from .linalg import Matrix
from .scalar import ParseError, format_literal, parse_literal

__all__ = ["SchemaError", "to_dict", "from_dict", "dump", "load", "same_structure"]


class SchemaError(ValueError):
    def __init__(self, where: str, msg: str):
        super().__init__(f"{where}: {msg}")
        self.where = where


def to_dict(h: FinHopf) -> dict:
    n = h.dim
    mult = []
    for i in range(n):
        for j in range(n):
            v = h.mult[i][j]
            if v:
                mult.append([i, j, [[k, format_literal(c)] for k, c in sorted(v.items())]])
    comult = [[i, [[j, k, format_literal(c)] for j, k, c in sorted(h.comult[i])]] for i in range(n)]
    return {
        "dim": n,
        "name": h.name,
        "basis": list(h.basis),
        "mult": mult,
        "comult": comult,
        "counit": [format_literal(c) for c in h.counit],
        "antipode": [[format_literal(x) for x in row] for row in h.antipode.data],
    }


def _lit(x, where):
    if not isinstance(x, str):
        raise SchemaError(where, f"expected a literal string, got {type(x).__name__}")
    try:
        return parse_literal(x)
    except (ParseError, ZeroDivisionError, ValueError) as e:
        raise SchemaError(where, f"bad literal {x!r} ({e})") from None


def _idx(x, n, where):
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
        raise SchemaError(where, f"index {x!r} out of range 0..{n - 1}")
    return x


def from_dict(d: dict) -> FinHopf:
    if not isinstance(d, dict):
        raise SchemaError("$", "top level must be an object")
    for key in ("dim", "basis", "mult", "comult", "counit", "antipode"):
        if key not in d:
            raise SchemaError("$", f"missing key {key!r}")
    n = d["dim"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError("$.dim", "positive integer expected")
    basis = d["basis"]
    if not isinstance(basis, list) or len(basis) != n:
        raise SchemaError("$.basis", f"list of {n} labels expected")
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for t, entry in enumerate(d["mult"]):
        where = f"$.mult[{t}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise SchemaError(where, "expected [i, j, terms]")
        i, j = _idx(entry[0], n, where + "[0]"), _idx(entry[1], n, where + "[1]")
        for s, term in enumerate(entry[2]):
            w2 = f"{where}[2][{s}]"
            if not isinstance(term, list) or len(term) != 2:
                raise SchemaError(w2, "expected [k, literal]")
            k = _idx(term[0], n, w2 + "[0]")
            c = _lit(term[1], w2 + "[1]")
            if c:
                mult[i][j][k] = c
    comult = [[] for _ in range(n)]
    for t, entry in enumerate(d["comult"]):
        where = f"$.comult[{t}]"
        if not isinstance(entry, list) or len(entry) != 2:
            raise SchemaError(where, "expected [i, terms]")
        i = _idx(entry[0], n, where + "[0]")
        for s, term in enumerate(entry[1]):
            w2 = f"{where}[1][{s}]"
            if not isinstance(term, list) or len(term) != 3:
                raise SchemaError(w2, "expected [j, k, literal]")
            comult[i].append((_idx(term[0], n, w2 + "[0]"), _idx(term[1], n, w2 + "[1]"),
                              _lit(term[2], w2 + "[2]")))
        comult[i].sort(key=lambda x: (x[0], x[1]))
    counit = d["counit"]
    if not isinstance(counit, list) or len(counit) != n:
        raise SchemaError("$.counit", f"list of {n} literals expected")
    counit = [_lit(x, f"$.counit[{i}]") for i, x in enumerate(counit)]
    S = d["antipode"]
    if not isinstance(S, list) or len(S) != n or any(not isinstance(r, list) or len(r) != n for r in S):
        raise SchemaError("$.antipode", f"{n}x{n} matrix expected")
    S = Matrix([[_lit(x, f"$.antipode[{i}][{j}]") for j, x in enumerate(row)] for i, row in enumerate(S)])
    try:
        return FinHopf(basis, mult, comult, counit, S, name=d.get("name", ""))
    except ValueError as e:
        raise SchemaError("$.mult", str(e)) from None


def dump(h: FinHopf, path: str) -> None:
    with open(path, "w") as f:
        json.dump(to_dict(h), f, indent=1)
        f.write("\n")


def load(path: str) -> FinHopf:
    try:
        with open(path) as f:
            d = json.load(f)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}:{e.lineno}:{e.colno}", e.msg) from None
    return from_dict(d)


def same_structure(g: FinHopf, h: FinHopf) -> bool:
    """Identical structure constants on identical basis labels."""
    if g.dim != h.dim or list(g.basis) != list(h.basis):
        return False
    n = g.dim
    for i in range(n):
        for j in range(n):
            if g.mult[i][j] != h.mult[i][j]:
                return False
        if sorted(g.comult[i]) != sorted(h.comult[i]):
            return False
    return g.counit == h.counit and g.antipode == h.antipode
