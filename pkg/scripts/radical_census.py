"""Jacobson radical of the 256-dimensional double and the simple census.

    python3 scripts/radical_census.py [--json out.json]
"""
import argparse
import itertools
import json
import time
from dataclasses import dataclass

from hopfkit.double import the_double
from hopfkit.hopf import radical_dim
from hopfkit.rep import check_representation, extra_simples, intertwiner_dim, is_simple, simple_list


@dataclass
class Config:
    json_out: str | None = None


def run(cfg: Config) -> dict:
    t0 = time.perf_counter()
    D = the_double()
    rad = radical_dim(D.carrier)
    listed = simple_list()
    extra = extra_simples()
    ok_extra = all(check_representation(m).ok and is_simple(m) for m in extra)
    clash = [(m.label, n.label) for m, n in itertools.product(extra, listed)
             if m.dim == n.dim and intertwiner_dim(m, n)]
    clash += [(m.label, n.label) for m, n in itertools.combinations(extra, 2) if intertwiner_dim(m, n)]
    out = {
        "radical_dim": rad,
        "semisimple_quotient_dim": 256 - rad,
        "listed_simples": len(listed),
        "listed_square_sum": sum(m.dim ** 2 for m in listed),
        "extra_simples": [list(m.params) for m in extra],
        "extra_are_new_simples": ok_extra and not clash,
        "census_with_extras": sum(m.dim ** 2 for m in listed + extra),
        "seconds": round(time.perf_counter() - t0, 2),
    }
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", dest="json_out")
    cfg = Config(**vars(ap.parse_args()))
    out = run(cfg)
    print(f"dim J(D)                 = {out['radical_dim']}")
    print(f"dim D/J(D)               = {out['semisimple_quotient_dim']}")
    print(f"48 listed simples        : sum of squares {out['listed_square_sum']}")
    print(f"extra 2-dim simples      : {len(out['extra_simples'])} "
          f"(simple, pairwise distinct, new: {out['extra_are_new_simples']})")
    print(f"census incl. extras      : {out['census_with_extras']} "
          f"{'== 256 - dim J' if out['census_with_extras'] == out['semisimple_quotient_dim'] else '!='}")
    for p in out["extra_simples"]:
        print("  V_" + "".join(map(str, p)))
    if cfg.json_out:
        with open(cfg.json_out, "w") as f:
            json.dump(out, f, indent=2)


if __name__ == "__main__":
    main()
