"""Braiding scalars of the 16 one-dimensional YD modules and their Nichols algebras.

Prints the computed scalar next to the displayed closed form and the set of
characters with finite Nichols algebra.
"""
import argparse
from dataclasses import dataclass

from hopfkit.nichols import LAMBDA0, classify
from hopfkit.yd import braiding, expected_braiding, translate


@dataclass
class Config:
    max_degree: int = 6


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=6)
    cfg = Config(**vars(ap.parse_args()))
    finite = []
    print(f"{'(i,j,k)':10} {'computed':>9} {'displayed':>10}  Nichols dims")
    for i in range(2):
        for j in range(2):
            for k in range(4):
                p = (i, j, k)
                q = braiding(translate(p)).data[0][0]
                e = expected_braiding(p).data[0][0]
                r = classify(p, cfg.max_degree)
                flag = "" if q == e else "   <- differs"
                print(f"{str(p):10} {q.to_literal():>9} {e.to_literal():>10}  {r.dims} {r.verdict}{flag}")
                if r.verdict == "finite":
                    finite.append(p)
    print()
    print("finite (computed): ", finite)
    print("displayed list:    ", LAMBDA0)
    print("only displayed:    ", sorted(set(LAMBDA0) - set(finite)))
    print("only computed:     ", sorted(set(finite) - set(LAMBDA0)))


if __name__ == "__main__":
    main()
