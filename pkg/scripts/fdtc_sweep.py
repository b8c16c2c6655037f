"""FDTC intervals of a few braids as the depth grows, as CSV."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from cuspskew.braid import parse_braid
from cuspskew.dehornoy import fdtc_interval


@dataclass
class SweepConfig:
    braids: tuple[str, ...] = ("B2: 1", "B3: 1 2", "B3: 1 -2", "B3: 1 2 1 1 2 1 1", "B4: 1 2 3 3 2 1")
    max_depth: int = 16


def run(cfg: SweepConfig) -> list[tuple]:
    rows = []
    for text in cfg.braids:
        beta = parse_braid(text)
        for k in range(1, cfg.max_depth + 1):
            iv = fdtc_interval(beta, k)
            rows.append((text, k, iv.lo, iv.hi, float(iv.lo + iv.hi) / 2))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-depth", type=int, default=16)
    ap.add_argument("braids", nargs="*")
    args = ap.parse_args()
    cfg = SweepConfig(max_depth=args.max_depth)
    if args.braids:
        cfg.braids = tuple(args.braids)
    print("braid,k,lo,hi,mid")
    for text, k, lo, hi, mid in run(cfg):
        print(f"\"{text}\",{k},{lo},{hi},{mid:.6f}")


if __name__ == "__main__":
    main()
