"""Tabulate the smallness constants (A, B) against chi and name the binding gate."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from cuspskew.cone_flow import hypothesis_limits, derive_hypothesis_constants


@dataclass
class TableConfig:
    chi_min: int = -20
    chi_max: int = -1
    margin: float = 0.01


def run(cfg: TableConfig) -> list[tuple]:
    rows = []
    for chi in range(cfg.chi_max, cfg.chi_min - 1, -1):
        limits = hypothesis_limits(chi)
        binding = min(limits, key=lambda k: limits[k][0])
        hc = derive_hypothesis_constants(chi, cfg.margin)
        rows.append((chi, hc.A, hc.B, binding))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--chi-min", type=int, default=-20)
    ap.add_argument("--margin", type=float, default=0.01)
    args = ap.parse_args()
    print("chi,A,B,binding_gate")
    for chi, A, B, gate in run(TableConfig(chi_min=args.chi_min, margin=args.margin)):
        print(f"{chi},{A:.6e},{B:.6f},{gate}")


if __name__ == "__main__":
    main()
