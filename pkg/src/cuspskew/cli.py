"""Command-line front end: ``cst <subcommand> ...``.

JSON goes to stdout (CSV for ``sweep`` and ``cone constants``). Exit codes:
0 success, 1 a certificate or hypothesis gate failed, 2 parse or usage error,
3 a search budget ran out. CST_BUDGET overrides the default budgets.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from . import arc_graph, band_metric, bounds, cone_flow, cusp_model, dehornoy
from .braid import parse_braid
from .errors import BudgetExceeded, HypothesisViolation, ParseError
from .interval import Interval

__all__ = ["main", "run", "to_jsonable"]

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3
SIG_DIGITS = 12


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def to_jsonable(obj: Any) -> Any:
    """Round floats to 12 significant digits; Fractions become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if math.isfinite(obj):
            return float(f"{obj:.{SIG_DIGITS}g}")
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Interval):
        return [to_jsonable(obj.lo), to_jsonable(obj.hi)]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "as_dict"):
        return to_jsonable(obj.as_dict())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _emit(obj: Any) -> None:
    print(json.dumps(to_jsonable(obj)))


def _fmt(x: Any) -> str:
    if isinstance(x, float):
        return f"{x:.{SIG_DIGITS}g}"
    return str(x)


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(x) for x in r])


def _budget(default: int) -> int:
    env = os.environ.get("CST_BUDGET")
    if env is None:
        return default
    try:
        value = int(env)
    except ValueError:
        raise ParseError(f"CST_BUDGET must be an integer, got {env!r}") from None
    if value < 1:
        raise ParseError("CST_BUDGET must be positive")
    return value


def _floats(text: str, count: int, what: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"{what}: expected {count} comma-separated numbers") from None
    if len(vals) != count:
        raise ParseError(f"{what}: expected {count} comma-separated numbers")
    return vals


def _ints(text: str, count: int, what: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"{what}: expected {count} comma-separated integers") from None
    if len(vals) != count:
        raise ParseError(f"{what}: expected {count} comma-separated integers")
    return vals


def _torus(text: str) -> cusp_model.FlatTorus:
    a, b, c = _floats(text, 3, "--torus")
    try:
        return cusp_model.FlatTorus(a, b, c)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _vertex(text: str) -> arc_graph.PointedVertex:
    arc, sep, off = text.rpartition(":")
    if not sep or not arc:
        raise ParseError(f"vertex must look like arc:offset, got {text!r}")
    try:
        return arc_graph.PointedVertex(arc, Fraction(off))
    except ValueError as exc:
        raise ParseError(f"bad vertex {text!r}: {exc}") from exc


def _int_range(text: str) -> list[int]:
    """'a:b' inclusive integer range (empty when b < a)."""
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise ParseError(f"integer range must look like a:b, got {text!r}") from None
    return list(range(a, b + 1))


def _float_grid(text: str) -> list[float]:
    """'lo:hi:num' with num evenly spaced points (empty when num = 0)."""
    try:
        lo, hi, num = text.split(":")
        lo, hi, n = float(lo), float(hi), int(num)
    except ValueError:
        raise ParseError(f"grid must look like lo:hi:num, got {text!r}") from None
    if n < 0:
        raise ParseError("grid size must be non-negative")
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


# subcommand handlers return an exit code


def _cmd_floor(args) -> int:
    beta = parse_braid(args.braid)
    _emit({"floor": dehornoy.dehornoy_floor(beta, _budget(args.budget))})
    return EXIT_OK


def _cmd_fdtc(args) -> int:
    beta = parse_braid(args.braid)
    iv = dehornoy.fdtc_interval(beta, args.depth, _budget(args.budget))
    _emit({"lo": iv.lo, "hi": iv.hi, "depth": iv.depth})
    return EXIT_OK


def _cmd_lt(args) -> int:
    beta = parse_braid(args.braid)
    if args.conj:
        res = band_metric.conj_min_lt(
            beta, _budget(args.budget or 500), max_syllables=args.max_syllables,
            max_power=args.max_power, seed=args.seed,
        )
    else:
        res = band_metric.lt_length(
            beta, args.max_syllables, args.max_power, _budget(args.budget or 200_000)
        )
    _emit(res)
    return EXIT_BUDGET if res.value is None else EXIT_OK


def _cmd_thm4(args) -> int:
    beta = parse_braid(args.braid)
    out = band_metric.thm4_volume_interval(
        beta, args.A, _budget(args.budget), seed=args.seed,
        floor_budget=_budget(dehornoy.DEFAULT_BUDGET),
    )
    _emit(out)
    return EXIT_OK if out["applicable"] else EXIT_FAIL


def _cmd_cusp(args) -> int:
    t = _torus(args.torus)
    out: dict[str, Any] = {"a": t.a, "b": t.b, "c": t.c, "skew": cusp_model.skew(t),
                           "area": t.area, "height": t.height}
    if args.slope:
        slopes = []
        for s in args.slope:
            p, q = _ints(s, 2, "--slope")
            if p == 0 and q == 0:
                raise ParseError("(0, 0) is not a slope")
            slopes.append({"slope": [p, q], "length": cusp_model.slope_length(t, p, q),
                           "normalized": cusp_model.normalized_length(t, p, q)})
        out["slopes"] = slopes
    _emit(out)
    return EXIT_OK


def _cmd_cert(args) -> int:
    name = args.name
    if name == "lemma8":
        if not args.torus or not args.slope:
            raise ParseError("lemma8 needs --torus and at least one --slope")
        cert = cusp_model.lemma8_certificate(
            _torus(args.torus), [tuple(_ints(s, 2, "--slope")) for s in args.slope]
        )
    else:
        fields = {
            "lemma9": ("l", "chi"),
            "thm2": ("fd", "sk", "chi", "d"),
            "thm10": ("height", "chi", "d"),
            "lemma18": ("l", "chi", "d"),
            "cor19": ("sk_uv", "sk_u", "sk_v", "chi", "d_u", "d_v", "d_uv"),
        }[name]
        missing = [f for f in fields if getattr(args, f) is None]
        if missing:
            raise ParseError(f"{name} needs " + ", ".join("--" + m.replace("_", "-") for m in missing))
        vals = [getattr(args, f) for f in fields]
        fn = getattr(cusp_model, f"{name}_certificate")
        cert = fn(*vals)
    _emit(cert)
    return EXIT_OK if cert.holds else EXIT_FAIL


def _cmd_constants(args) -> int:
    p = bounds.FillingParams(args.eps, args.J)
    if args.which == "K":
        first, second = bounds.K_squared_branches(p)
        _emit({"K_squared": bounds.K_squared(p), "branches": [first, second],
               "epsilon": p.epsilon, "J": p.J})
    else:
        if args.chi is None:
            raise ParseError("constants F needs --chi")
        _emit({"F": bounds.F_constant(args.chi, p), "chi": args.chi,
               "epsilon": p.epsilon, "J": p.J})
    return EXIT_OK


def _cmd_gate(args) -> int:
    if args.which == "prop22":
        cert = bounds.prop22_gate(args.fd or [], args.chi, args.c)
        _emit(cert)
        return EXIT_OK if cert.holds else EXIT_FAIL
    if args.vol is None:
        raise ParseError("gate volume needs --vol")
    lo, hi = bounds.prop22_volume_interval(args.vol, args.c)
    _emit({"factor": bounds.prop22_factor(args.c), "interval": [lo, hi]})
    return EXIT_OK


def _cmd_tight(args) -> int:
    cert = bounds.tightness_certificate(bounds.TightnessInput(args.l, args.tau, args.chi))
    _emit(cert)
    return EXIT_OK if cert.holds else EXIT_FAIL


def _cmd_graph(args) -> int:
    base = arc_graph.load_base_graph(args.base)
    if args.which == "dist":
        if args.u is None or args.v is None:
            raise ParseError("graph dist needs --u and --v")
        u, v = _vertex(args.u), _vertex(args.v)
        d = arc_graph.distance(u, v, base, args.mode, args.cap, args.cross_arc)
        _emit({"distance": d, "mode": args.mode, "cap": args.cap})
        return EXIT_OK
    if args.action is None:
        raise ParseError(f"graph {args.which} needs --action")
    act = arc_graph.load_action(args.action, base)
    if args.which == "tdist":
        d = arc_graph.translation_distance(act, base, args.cap, args.mode, args.cross_arc)
        _emit({"translation_distance": d, "mode": args.mode, "cap": args.cap})
        return EXIT_OK
    arcs = [args.arc] if args.arc else base.arcs
    out = {a: list(arc_graph.lemma17_fdtc_interval(act, a)) for a in arcs}
    _emit({"fdtc": out})
    return EXIT_OK


def _cmd_cone(args) -> int:
    if args.which == "constants":
        rows = cone_flow.constant_chain()
        _emit_csv(["name", "computed", "published_bound", "pass"], rows)
        return EXIT_OK if all(r[3] for r in rows) else EXIT_FAIL
    if None in (args.l, args.tau, args.chi):
        raise ParseError("cone estimate needs --l, --tau and --chi")
    hc = cone_flow.derive_hypothesis_constants(args.chi)
    sk, hr = cone_flow.lemma28_estimates(args.l, args.tau, hc)
    _emit({"sk": sk, "height_ratio": hr, "A": hc.A, "B": hc.B, "chi": args.chi})
    return EXIT_OK


def _sweep_fdtc(args) -> tuple[list[str], list[list]]:
    beta = parse_braid(args.braid or "B2: 1")
    budget = _budget(dehornoy.DEFAULT_BUDGET)
    rows = []
    for k in _int_range(args.k or "1:10"):
        iv = dehornoy.fdtc_interval(beta, k, budget)
        rows.append([k, iv.lo, iv.hi, iv.width])
    return ["k", "lo", "hi", "width"], rows


def _sweep_K(args) -> tuple[list[str], list[list]]:
    rows = []
    for eps in _float_grid(args.eps or f"0.1:{math.log(3)}:10"):
        p = bounds.FillingParams(eps, args.J)
        first, second = bounds.K_squared_branches(p)
        rows.append([eps, args.J, first, second, bounds.K_squared(p)])
    return ["epsilon", "J", "branch1", "branch2", "K_squared"], rows


def _sweep_F(args) -> tuple[list[str], list[list]]:
    p = bounds.FillingParams(args.eps_value, args.J)
    rows = [[chi, bounds.F_constant(chi, p)] for chi in _int_range(args.chi_range or "-5:-1")]
    return ["chi", "F"], rows


def _sweep_hyp(args) -> tuple[list[str], list[list]]:
    rows = []
    for chi in _int_range(args.chi_range or "-10:-1"):
        hc = cone_flow.derive_hypothesis_constants(chi)
        rows.append([chi, hc.A, hc.B])
    return ["chi", "A", "B"], rows


_SWEEPS: dict[str, Callable] = {
    "fdtc": _sweep_fdtc,
    "K": _sweep_K,
    "F": _sweep_F,
    "hypothesis": _sweep_hyp,
}


def _cmd_sweep(args) -> int:
    header, rows = _SWEEPS[args.which](args)
    _emit_csv(header, rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cst", description="Coarse cusp geometry toolkit")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("floor", help="Dehornoy floor of a braid")
    s.add_argument("braid")
    s.add_argument("--budget", type=int, default=dehornoy.DEFAULT_BUDGET)
    s.set_defaults(func=_cmd_floor)

    s = sub.add_parser("fdtc", help="rational interval containing the FDTC")
    s.add_argument("braid")
    s.add_argument("--depth", type=int, default=1)
    s.add_argument("--budget", type=int, default=dehornoy.DEFAULT_BUDGET)
    s.set_defaults(func=_cmd_fdtc)

    s = sub.add_parser("lt", help="syllable length over band twists")
    s.add_argument("braid")
    s.add_argument("--max-syllables", type=int, default=3)
    s.add_argument("--max-power", type=int, default=2)
    s.add_argument("--conj", action="store_true", help="minimise over conjugates")
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=_cmd_lt)

    s = sub.add_parser("thm4", help="closure volume bracket for large floors")
    s.add_argument("braid")
    s.add_argument("--A", type=float, required=True)
    s.add_argument("--budget", type=int, default=500)
    s.set_defaults(func=_cmd_thm4)

    s = sub.add_parser("cusp", help="flat torus data")
    s.add_argument("--torus", required=True, help="a,b,c")
    s.add_argument("--slope", action="append", help="p,q (repeatable)")
    s.set_defaults(func=_cmd_cusp)

    s = sub.add_parser("cert", help="check one cusp inequality")
    s.add_argument("name", choices=["lemma8", "lemma9", "thm2", "thm10", "lemma18", "cor19"])
    s.add_argument("--torus")
    s.add_argument("--slope", action="append")
    for f in ("l", "fd", "sk", "d", "height", "sk-uv", "sk-u", "sk-v", "d-u", "d-v", "d-uv"):
        s.add_argument(f"--{f}", type=float)
    s.add_argument("--chi", type=int)
    s.set_defaults(func=_cmd_cert)

    s = sub.add_parser("constants", help="Dehn filling constants")
    s.add_argument("which", choices=["K", "F"])
    s.add_argument("--eps", type=float, default=math.log(3))
    s.add_argument("--J", type=float, default=2.0)
    s.add_argument("--chi", type=int)
    s.set_defaults(func=_cmd_constants)

    s = sub.add_parser("gate", help="filling hypothesis gates")
    s.add_argument("which", choices=["prop22", "volume"])
    s.add_argument("--fd", type=float, action="append")
    s.add_argument("--chi", type=int, default=-1)
    s.add_argument("--c", type=float, required=True)
    s.add_argument("--vol", type=float)
    s.set_defaults(func=_cmd_gate)

    s = sub.add_parser("tight", help="geometric tightness criterion")
    s.add_argument("--l", type=float, required=True)
    s.add_argument("--tau", type=float, required=True)
    s.add_argument("--chi", type=int, required=True)
    s.set_defaults(func=_cmd_tight)

    s = sub.add_parser("graph", help="pointed arc graph distances")
    s.add_argument("which", choices=["dist", "tdist", "fdtc"])
    s.add_argument("--base", required=True, type=Path)
    s.add_argument("--action", type=Path)
    s.add_argument("--u")
    s.add_argument("--v")
    s.add_argument("--arc")
    s.add_argument("--mode", choices=["G", "Ap"], default="G")
    s.add_argument("--cross-arc", choices=["certified", "coarse"], default="certified")
    s.add_argument("--cap", type=int, default=10)
    s.set_defaults(func=_cmd_graph)

    s = sub.add_parser("cone", help="cone deformation estimates")
    s.add_argument("which", choices=["estimate", "constants"])
    s.add_argument("--l", type=float)
    s.add_argument("--tau", type=float)
    s.add_argument("--chi", type=int)
    s.set_defaults(func=_cmd_cone)

    s = sub.add_parser("sweep", help="CSV over a parameter grid")
    s.add_argument("which", choices=sorted(_SWEEPS))
    s.add_argument("--braid")
    s.add_argument("--k", help="depth range a:b")
    s.add_argument("--eps", help="grid lo:hi:num")
    s.add_argument("--eps-value", type=float, default=math.log(3))
    s.add_argument("--J", type=float, default=2.0)
    s.add_argument("--chi-range", help="chi range a:b")
    s.set_defaults(func=_cmd_sweep)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except HypothesisViolation as exc:
        _emit({"error": str(exc), "gate": exc.gate})
        return EXIT_FAIL
    except BudgetExceeded as exc:
        _emit({"error": str(exc)})
        return EXIT_BUDGET
    except (_UsageError, ParseError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
