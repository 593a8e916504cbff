"""Print the injection on every partition of n (default 19) and the per-n audit counts."""

import argparse
from dataclasses import dataclass

from stanley.injection import ResidueClassSpec, full_map, injectivity_audit
from stanley.partitions import enumerate_partitions


@dataclass
class Config:
    n: int = 19
    m: int = 8
    r: int = 3
    L: int = 3
    audit_to: int = 40


def run(cfg: Config) -> None:
    spec = ResidueClassSpec(cfg.m, cfg.r, cfg.L)
    images = set()
    print(f"# partitions of {cfg.n}, {spec}")
    for pi in enumerate_partitions(cfg.n, spec.domain_constraint()):
        image, trace = full_map(pi, spec)
        images.add(image.parts)
        print(f"{str(pi):>16}  ->  {str(image):<16} case {trace.case_label}  ({trace.condition})")
    for p in enumerate_partitions(cfg.n, spec.codomain_constraint()):
        if p.parts not in images:
            print(f"{'':>16}      {p}")
    print()
    print(injectivity_audit(cfg.audit_to, spec).to_tsv(), end="")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
