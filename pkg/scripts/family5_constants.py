"""Family Lambda^5(mu): displayed constants versus the ones forced by the
coaction, checked by building both versions."""
import argparse
from dataclasses import dataclass, field

from hopfkit.boson import _family5_constants, build_lifting, compare_with_bosonization, verify_lifting
from hopfkit.nichols import LAMBDA_SETS
from hopfkit.rep import lambdas
from hopfkit.scalar import parse_literal


@dataclass
class Config:
    mus: list = field(default_factory=lambda: ["0", "1", "sqrt2"])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mu", dest="mus", nargs="+", default=["0", "1", "sqrt2"])
    cfg = Config(**vars(ap.parse_args()))
    for p in LAMBDA_SETS[5]:
        _, l2, _, l4 = lambdas(*p)
        pk, pc = _family5_constants(l2, l4, "printed")
        ck, cc = _family5_constants(l2, l4, "corrected")
        print(f"{p}: kappa displayed {pk}, consistent {ck}; Delta(y) coefficient displayed {pc}, consistent {cc}")
        for lit in cfg.mus:
            mu = parse_literal(lit)
            for variant in ("printed", "corrected"):
                L = build_lifting(5, p, mu, variant)
                rep = verify_lifting(L)
                if not mu:
                    rep.extend(compare_with_bosonization(L), "mu=0: ")
                bad = ", ".join(c.name for c in rep.failures()[:3])
                print(f"    mu={lit:6} {variant:9}: {'pass' if rep.ok else 'FAIL  ' + bad}")


if __name__ == "__main__":
    main()
