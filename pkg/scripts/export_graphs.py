#!/usr/bin/env python3
"""Dump the fibration graphs for a range of ranks as DOT and JSON files.

Usage: python scripts/export_graphs.py --out-dir out [--n-min 2] [--n-max 14]
"""

import argparse
import json
import pathlib

from adlv.cli import classify_dot, classify_json


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", required=True)
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=14)
    args = ap.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for n in range(args.n_min, args.n_max + 1):
        (out / f"strata_n{n}.dot").write_text(classify_dot(n))
        (out / f"strata_n{n}.json").write_text(
            json.dumps(classify_json(n), indent=2) + "\n")
        print(f"n={n}: wrote strata_n{n}.dot and strata_n{n}.json")


if __name__ == "__main__":
    main()
