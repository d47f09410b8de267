"""Run both theorem suites and store their JSON reports."""
import argparse
import os
from dataclasses import dataclass

from hopfkit.boson import theorem_b_suite
from hopfkit.cli import theorem_a_report


@dataclass
class Config:
    out_dir: str = "results"
    jobs: int = 1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="results")
    ap.add_argument("--jobs", type=int, default=1)
    cfg = Config(**vars(ap.parse_args()))
    os.makedirs(cfg.out_dir, exist_ok=True)
    for name, rep in (("theorem_A", theorem_a_report()), ("theorem_B", theorem_b_suite(jobs=cfg.jobs))):
        with open(os.path.join(cfg.out_dir, f"{name}.json"), "w") as f:
            f.write(rep.to_json())
        fails = rep.failures()
        print(f"{name}: {rep.status} ({len(rep.checks)} checks, {len(fails)} failed, {rep.timing_ms / 1000:.1f} s)")
        for c in fails:
            print(f"   {c.name}: {c.detail}")


if __name__ == "__main__":
    main()
