#!/usr/bin/env python3
"""Sweep a range of ranks and tabulate stratification statistics.

Usage: python scripts/stratification_report.py [--n-min 2] [--n-max 20]
"""

import argparse

from adlv.gu import StratumClass, classify, dim_basic_locus, irr_orbit_count, \
    s_admissible, top_strata


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=20)
    args = ap.parse_args()

    header = f"{'n':>3} {'labels':>7} {'dl':>5} {'not_dl':>7} {'empty':>6} " \
             f"{'dim':>4} {'orbits':>7}  top strata"
    print(header)
    print("-" * len(header))
    for n in range(args.n_min, args.n_max + 1):
        counts = {cls: 0 for cls in StratumClass}
        for (k, l) in s_admissible(n):
            counts[classify(n, k, l)] += 1
        tops = ",".join(f"({k},{l})" for k, l in sorted(top_strata(n)))
        print(f"{n:>3} {len(s_admissible(n)):>7} {counts[StratumClass.DL]:>5} "
              f"{counts[StratumClass.NOT_DL]:>7} {counts[StratumClass.EMPTY]:>6} "
              f"{dim_basic_locus(n):>4} {irr_orbit_count(n):>7}  {tops}")


if __name__ == "__main__":
    main()
