"""Command-line front end.

Every command prints one JSON report on stdout (sorted keys, floats to 12
significant digits) and a short human summary on stderr; ``--json``
silences the summary.  Exit status: 0 success, 1 domain error (the report
then carries an ``error`` object), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import alexander as alx
from . import coloring as col
from . import trochoid as tro
from .diagram import Diagram, arc_index, parse_pd, torus_diagram
from .errors import KnotError
from .laurent import LaurentPoly
from .svg import coloring_svg, trochoid_svg

FLOAT_DIGITS = 12


class UsageError(Exception):
    pass


# report formatting

def _clean(x: Any) -> Any:
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            return str(x)
        v = float(f"{x:.{FLOAT_DIGITS}g}")
        return 0.0 if v == 0 else v
    if isinstance(x, (complex, np.complexfloating)):
        return [_clean(x.real), _clean(x.imag)]
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, LaurentPoly):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, np.ndarray)):
        return [_clean(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(report: dict) -> str:
    return json.dumps(_clean(report), sort_keys=True, indent=2)


def pi_multiple(theta: float, max_den: int = 1000, tol: float = 1e-9) -> str | None:
    """``'p/q'`` when ``theta`` is within ``tol`` of ``p/q * pi``."""
    frac = Fraction(theta / math.pi).limit_denominator(max_den)
    if abs(theta - float(frac) * math.pi) > tol:
        return None
    return str(frac)


def angle_entry(theta: float) -> dict:
    return {"radians": theta, "pi": pi_multiple(theta)}


_PI_EXPR = re.compile(r"^\s*([+-]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


def parse_angle(text: str) -> float:
    """Accept ``1.047``, ``pi/3``, ``-5pi/6``, ``2*pi/7``."""
    m = _PI_EXPR.match(text)
    if m:
        num = m.group(1)
        coef = {"": 1.0, "+": 1.0, "-": -1.0}.get(num)
        if coef is None:
            coef = float(num)
        den = float(m.group(2)) if m.group(2) else 1.0
        return coef * math.pi / den
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from None


def coloring_entry(c: col.Coloring) -> dict:
    return {"angle": angle_entry(c.angle), "centers": list(c.centers)}


def _coloring_from_entry(e: dict) -> col.Coloring:
    return col.Coloring(float(e["angle"]["radians"]), tuple(complex(x, y) for x, y in e["centers"]))


# diagram input

def _load_diagram(args) -> tuple[Diagram, dict]:
    if args.torus is not None:
        if args.pd_file is not None:
            raise UsageError("give either a PD file or --torus, not both")
        p, q = args.torus
        return torus_diagram(p, q), {"torus": [p, q]}
    if args.pd_file is None:
        raise UsageError("a PD file or --torus P Q is required")
    path = Path(args.pd_file)
    text = sys.stdin.read() if args.pd_file == "-" else path.read_text()
    return parse_pd(text), {"pd_file": str(path), "pd": text.strip()}


# commands

def cmd_alexander(args) -> dict:
    d, inputs = _load_diagram(args)
    if args.torus is not None:
        closed = alx.torus_alexander_closed_form(*args.torus)
    res: dict[str, Any] = {"n_arcs": d.n_arcs, "alexander": alx.alexander_polynomial(d)}
    if args.torus is not None:
        res["closed_form"] = closed
        res["matches_closed_form"] = closed == res["alexander"]
    if args.all:
        tower = alx.alexander_tower(d)
        res["tower"] = tower
        res["elementary_divisors"] = alx.divisors_from_tower(tower)
    inputs["all"] = args.all
    _human(args, f"Delta = {res['alexander']}")
    return {"inputs": inputs, "results": res, "tolerances": {}}


def cmd_colorable(args) -> dict:
    d, inputs = _load_diagram(args)
    v = col.is_colorable(d, tol=args.tol, rel_tol=args.rank_tol)
    res = {
        "colorable": v.colorable,
        "alexander": v.alexander,
        "witness_angles": [angle_entry(a) for a in v.witness_angles],
        "dimensions": v.dimensions,
        "consistent": v.consistent,
    }
    verdict = "colorable" if v.colorable else "not colorable"
    _human(args, f"{verdict}; Delta = {v.alexander}; angles/pi = "
           + ", ".join(str(pi_multiple(a) or f"{a / math.pi:.6g}") for a in v.witness_angles))
    return {"inputs": inputs, "results": res, "tolerances": {"root": args.tol, "rank": args.rank_tol}}


def cmd_colorings(args) -> dict:
    d, inputs = _load_diagram(args)
    th = args.angle
    space = col.coloring_space(d, th, args.rank_tol)
    normalized = [col.normalize_coloring(c) for c in space.nontrivial()]
    checks = [col.check_coloring(d, c, args.check_tol) for c in normalized]
    inputs["angle"] = angle_entry(th)
    res = {
        "dimension": space.dimension,
        "diagram": d.to_json(),
        "colorings": [coloring_entry(c) for c in normalized],
        "max_residuals": [r.max_residual for r in checks],
    }
    _human(args, f"dimension {space.dimension} at angle {th:.12g}; {len(normalized)} non-trivial basis colorings")
    if args.svg and normalized:
        Path(args.svg).write_text(coloring_svg(d, normalized[0]))
        res["figure"] = args.svg
    return {"inputs": inputs, "results": res, "tolerances": {"rank": args.rank_tol, "check": args.check_tol}}


def cmd_check(args) -> dict:
    data = json.loads(Path(args.coloring_file).read_text())
    payload = data.get("results", data)
    d = Diagram.from_json(payload["diagram"])
    entries = payload["colorings"] if "colorings" in payload else [payload["coloring"]]
    results = []
    for e in entries:
        r = col.check_coloring(d, _coloring_from_entry(e), args.check_tol)
        results.append({"ok": r.ok, "max_residual": r.max_residual})
    ok = all(r["ok"] for r in results)
    _human(args, "all colorings pass" if ok else "some coloring FAILS the crossing condition")
    report = {"inputs": {"coloring_file": args.coloring_file}, "results": {"ok": ok, "checks": results},
              "tolerances": {"check": args.check_tol}}
    if not ok:
        report["error"] = {"code": "ColoringCheckFailed", "message": "crossing condition violated"}
    return report


def cmd_trochoid(args) -> dict:
    m, k, n, l = args.m, args.k, args.n, args.l
    tr = tro.trochoid_trace(m, k, n, l)
    res = {
        "theta": angle_entry(tr.theta),
        "steps": tr.steps,
        "fixed": tr.fixed,
        "placements": [{"rotation": angle_entry(p.angle), "shift": p.shift} for p in tr.placements],
        "pivots": tr.pivots,
        "z_grid": tr.z_grid.tolist(),
        "final_rotation": angle_entry(col.wrap_angle(tr.placements[-1].angle)),
    }
    if args.svg:
        Path(args.svg).write_text(trochoid_svg(tr))
        res["figure"] = args.svg
    _human(args, f"({m},{k};{n},{l})-trochoid: theta/pi = {pi_multiple(tr.theta) or tr.theta / math.pi}, {tr.steps} steps")
    return {"inputs": {"m": m, "k": k, "n": n, "l": l}, "results": res, "tolerances": {"contact": tro.CONTACT_TOL}}


def cmd_color_torus(args) -> dict:
    p, q, k, l = args.p, args.q, args.k, args.l
    d = torus_diagram(p, q)
    c = tro.trochoid_coloring(p, q, k, l)
    chk = col.check_coloring(d, c, args.check_tol)
    P, Q = abs(p), abs(q)
    names = [""] * d.n_arcs
    for i in range(Q):
        for j in range(1, P):
            names[arc_index(i, j, P, Q)] = f"a{i},{j}"
    res = {
        "diagram": d.to_json(),
        "arc_names": names,
        "coloring": coloring_entry(c),
        "check": {"ok": chk.ok, "max_residual": chk.max_residual},
        "nontrivial": not c.is_trivial(),
    }
    if args.svg:
        Path(args.svg).write_text(coloring_svg(d, c, names))
        res["figure"] = args.svg
    _human(args, f"T({p},{q}) coloring from ({P},{k};{Q},{l})-trochoid: check {'ok' if chk.ok else 'FAILED'}")
    report = {"inputs": {"p": p, "q": q, "k": k, "l": l}, "results": res, "tolerances": {"check": args.check_tol}}
    if not chk.ok:
        report["error"] = {"code": "ColoringCheckFailed", "message": "trochoid coloring violates a crossing"}
    return report


def cmd_verify_factorization(args) -> dict:
    rep = tro.verify_factorization(args.p, args.q)
    res = {
        "alexander": rep.alexander,
        "angles": [angle_entry(a) for a in rep.angles],
        "n_angles": len(rep.angles),
        "distinct": rep.distinct,
        "min_separation": rep.min_separation,
        "max_coeff_error": rep.max_coeff_error,
        "r": rep.r,
        "ok": rep.ok,
    }
    _human(args, f"Delta_T({args.p},{args.q}) = {rep.alexander}; max coeff error {rep.max_coeff_error:.3g}")
    return {"inputs": {"p": args.p, "q": args.q}, "results": res, "tolerances": {"coeff": 1e-10}}


def _human(args, line: str) -> None:
    if not args.json:
        print(line, file=sys.stderr)


# parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=col.DEFAULT_ROOT_TOL,
                        help="unit-circle tolerance for roots (default %(default)g)")
    common.add_argument("--rank-tol", type=float, default=col.DEFAULT_RANK_TOL,
                        help="relative singular-value cutoff (default %(default)g)")
    common.add_argument("--check-tol", type=float, default=col.DEFAULT_CHECK_TOL,
                        help="relative crossing-residual tolerance (default %(default)g)")
    common.add_argument("--json", action="store_true", help="JSON only; no summary on stderr")
    common.add_argument("--svg", metavar="PATH", help="also write an SVG figure")

    def diagram_args(sp):
        sp.add_argument("pd_file", nargs="?", help="file with a PD code ('-' for stdin)")
        sp.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"), help="use the torus diagram D(P, Q)")

    parser = _Parser(prog="rotcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("alexander", parents=[common], help="Alexander polynomial of a diagram")
    diagram_args(sp)
    sp.add_argument("--all", action="store_true", help="include the Delta^(i) tower and elementary divisors")
    sp.set_defaults(func=cmd_alexander)

    sp = sub.add_parser("colorable", parents=[common], help="decide colorability by plane rotations")
    diagram_args(sp)
    sp.set_defaults(func=cmd_colorable)

    sp = sub.add_parser("colorings", parents=[common], help="normalized basis of colorings at an angle")
    diagram_args(sp)
    sp.add_argument("--angle", type=parse_angle, required=True, help="radians, or e.g. pi/3")
    sp.set_defaults(func=cmd_colorings)

    sp = sub.add_parser("check-coloring", parents=[common], help="verify colorings from a JSON report")
    sp.add_argument("coloring_file")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("trochoid", parents=[common], help="trace the (m,k;n,l)-trochoid")
    for name in ("m", "k", "n", "l"):
        sp.add_argument(name, type=int)
    sp.set_defaults(func=cmd_trochoid)

    sp = sub.add_parser("color-torus", parents=[common], help="trochoid coloring of D(p,q)")
    for name in ("p", "q", "k", "l"):
        sp.add_argument(name, type=int)
    sp.set_defaults(func=cmd_color_torus)

    sp = sub.add_parser("verify-factorization", parents=[common], help="check the root-of-unity factorization")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.set_defaults(func=cmd_verify_factorization)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except KnotError as exc:
        report = {"inputs": {}, "results": {}, "tolerances": {},
                  "error": {"code": exc.code, "message": str(exc)}}
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
    except OSError as exc:
        report = {"inputs": {}, "results": {}, "tolerances": {},
                  "error": {"code": "IOError", "message": str(exc)}}
        print(f"error: {exc}", file=sys.stderr)
    report = {"command": args.command, **report}
    print(dumps(report), file=stdout)
    return 1 if "error" in report else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
