"""Re-derive the filling constants at 50 digits with mpmath and compare.

Shares no code with the package formulas; run directly to print a table.
"""

from __future__ import annotations

import mpmath as mp

mp.mp.dps = 50


def rederive() -> dict[str, mp.mpf]:
    eps = mp.log(3)
    J = mp.mpf(2)
    two_pi = 2 * mp.pi
    branch1 = two_pi * 6771 * mp.cosh(mp.mpf("0.6") * eps + mp.mpf("0.1475")) ** 5 / eps**5 + mp.mpf("11.7")
    branch2 = two_pi * mp.mpf("11.35") / (eps ** mp.mpf("2.5") * mp.log(J)) + mp.mpf("11.7")
    k2 = max(branch1, branch2)
    chi = 1
    F = k2 * (2 + chi) * (1 + 19296 * chi**6) + 3
    c = 4 * mp.pi
    factor = (1 - (two_pi / c) ** 2) ** mp.mpf("1.5")
    threshold = 7 * (1 + 3216 * (2 - 1) ** 5) + 4
    z = mp.tanh(mp.mpf("0.531"))
    profile = (1 + z**2) / z**3
    return {
        "K_squared": k2,
        "F": F,
        "prop22_factor": factor,
        "thm4_threshold": mp.mpf(threshold),
        "sup_ratio": (3 + 2 * mp.sqrt(2)) / 4,
        "domega_dt": mp.mpf("1.4572") / (2 * mp.mpf("3.3957")) * profile,
        "aux_rate": 1 / (2 * mp.mpf("3.3957")) * profile,
    }


def package_values() -> dict[str, float]:
    import math

    from cuspskew.band_metric import thm4_threshold
    from cuspskew.bounds import F_constant, FillingParams, K_squared, prop22_factor
    from cuspskew.cone_flow import aux_rate_bound, domega_dt_global_bound, sup_ratio_constant

    p = FillingParams(math.log(3), 2.0)
    return {
        "K_squared": K_squared(p),
        "F": F_constant(-1, p),
        "prop22_factor": prop22_factor(4 * math.pi),
        "thm4_threshold": float(thm4_threshold(2)),
        "sup_ratio": sup_ratio_constant(),
        "domega_dt": domega_dt_global_bound(),
        "aux_rate": aux_rate_bound(),
    }


def main() -> None:
    ref = rederive()
    got = package_values()
    print(f"{'name':16s} {'reference':>24s} {'package':>24s} {'rel err':>10s}")
    for k, v in ref.items():
        rel = abs(mp.mpf(got[k]) - v) / abs(v)
        print(f"{k:16s} {mp.nstr(v, 17):>24s} {got[k]:24.17g} {float(rel):10.2e}")


if __name__ == "__main__":
    main()
