"""Write the convergence tables (c_2n/c_2n+1, Meinardus ratio, p0/p) as TSV files."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from stanley import analysis


@dataclass
class Config:
    N: int = 1500
    stride: int = 50
    out: Path = Path("results")


def run(cfg: Config) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    reports = {
        "ratio.tsv": analysis.ratio_convergence(cfg.N),
        "meinardus.tsv": analysis.meinardus_compare(cfg.N),
        "p0_over_p.tsv": analysis.swisher_ratio_check(2 * cfg.N),
        "conjectures.tsv": analysis.conjecture_scan(cfg.N),
    }
    for fname, rep in reports.items():
        rep.table = [row for row in rep.table if row[0] % cfg.stride == 0]
        (cfg.out / fname).write_text(rep.to_tsv())
        print(rep.summary())


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=Config.N)
    ap.add_argument("--stride", type=int, default=Config.stride)
    ap.add_argument("--out", type=Path, default=Config.out)
    args = ap.parse_args()
    run(Config(N=args.N, stride=args.stride, out=args.out))


if __name__ == "__main__":
    main()
