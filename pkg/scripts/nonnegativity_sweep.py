"""Sweep class(m,1,L) - class(m,r,L) over small moduli and compare with the divisibility criterion."""

import argparse
from dataclasses import dataclass

from stanley.injection import theorem4_scan
from stanley.series import INF


@dataclass
class Config:
    max_m: int = 12
    N: int = 400
    lengths: tuple = (1, 2, 3, INF)


def run(cfg: Config) -> int:
    bad = 0
    print("m\tr\tL\tpredicted\tfirst_negative\tagrees")
    for m in range(5, cfg.max_m + 1):
        for r in range(2, m // 2 + 1):
            if 2 * r == m:
                continue
            for L in cfg.lengths:
                rep = theorem4_scan(m, r, L, cfg.N)
                predicted = (m - r) % r != 0 and r % (m - r) != 0
                first = rep.findings[0][0] if rep.findings else rep.first_violation()
                bad += not rep.passed
                Ls = "inf" if L == INF else L
                print(f"{m}\t{r}\t{Ls}\t{'nonneg' if predicted else 'negative'}\t{first if first is not None else '-'}\t{rep.passed}")
    return bad


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=Config.max_m)
    ap.add_argument("--N", type=int, default=Config.N)
    args = ap.parse_args()
    raise SystemExit(1 if run(Config(max_m=args.max_m, N=args.N)) else 0)


if __name__ == "__main__":
    main()
