"""Nichols algebras over the 16 extra two-dimensional simples and the Hopf
algebras B(V)#H for the finite ones."""
import argparse
import time
from dataclasses import dataclass

from hopfkit.boson import nichols_as_braided_hopf, projection_check, radford_biproduct
from hopfkit.hopf import coradical, verify_hopf_axioms
from hopfkit.nichols import braided_space, nichols_dims
from hopfkit.rep import extra_simples
from hopfkit.serialize import dump
from hopfkit.yd import from_double_module, verify_yd


@dataclass
class Config:
    max_degree: int = 6
    out_dir: str | None = None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=6)
    ap.add_argument("--out-dir")
    cfg = Config(**vars(ap.parse_args()))
    for m in extra_simples():
        y = from_double_module(m)
        assert verify_yd(y).ok
        r = nichols_dims(braided_space(y), cfg.max_degree)
        line = f"V_{''.join(map(str, m.params))}: {r.verdict:8} {r.dims}"
        if r.verdict == "finite":
            t0 = time.perf_counter()
            B = radford_biproduct(nichols_as_braided_hopf(m.params, cfg.max_degree, y=y),
                                  name=f"B(V{m.params})#H")
            ok = verify_hopf_axioms(B, mode="generators").ok and projection_check(B).ok
            line += f"  -> dim {B.dim}, Hopf axioms {'pass' if ok else 'FAIL'}, " \
                    f"coradical {len(coradical(B))}, {time.perf_counter() - t0:.2f} s"
            if cfg.out_dir:
                dump(B, f"{cfg.out_dir}/boson_{''.join(map(str, m.params))}.json")
        print(line)


if __name__ == "__main__":
    main()
