"""Command-line entry point.

Exit codes: 0 success, 1 usage or input error, 2 a checked mathematical
claim was falsified (a sweep hit, a method disagreement, a failed identity).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import re
import sys

from .classify import classify, is_primitive
from .divisibility import (
    compare_with_table1,
    corollary1_sweep,
    table1_divisors,
    trinomial_multiples,
    verify_table1,
)
from .gf2poly import PolyGF2, PolySpecError, parse
from .lfsr import NotPrimitive, generate, impulse_seed, prop2_check, seed_from_int
from .maxweight import MaxWeightPoly, as_maxweight, enumerate_mw, gcd_obstruction
from .oa import strength_report

log = logging.getLogger("mwpoly")

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2

_MW_SPEC = re.compile(r"\s*mw\s*:\s*(\d+)\s*,\s*(\d+)\s*$", re.IGNORECASE)

CSV_FIELDS = ("g", "f", "h", "deg_g", "weight_h")


class UsageError(Exception):
    pass


def parse_poly_spec(s: str) -> PolyGF2 | MaxWeightPoly:
    """Accept polynomial text ("x^5+x^4+1"), hex ("0x31") or "mw:m,l"."""
    if s.strip().lower().startswith("mw"):
        mt = _MW_SPEC.match(s)
        if not mt:
            raise PolySpecError("expected mw:m,l", s, 0)
        try:
            return MaxWeightPoly(int(mt.group(1)), int(mt.group(2)))
        except ValueError as exc:
            raise PolySpecError(str(exc), s, mt.start(1)) from None
    return parse(s)


def _expand(p) -> PolyGF2:
    return p.poly if isinstance(p, MaxWeightPoly) else p


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit_hits(hits, fmt: str, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, quoting=csv.QUOTE_NONE, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for h in hits:
            d = h.as_dict()
            w.writerow([d[k] for k in CSV_FIELDS])
    else:
        json.dump([h.as_dict() for h in hits], out, indent=2)
        out.write("\n")


def _dump(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def cmd_classify(args, out) -> int:
    rep = classify(_expand(args.poly))
    _dump(rep.as_dict(), out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    hits = trinomial_multiples(_expand(args.poly), args.max_deg)
    _emit_hits(hits, args.format, out)
    return EXIT_OK


def cmd_table1(args, out) -> int:
    hits = verify_table1()
    _emit_hits(hits, args.format, out)
    missing, extra = compare_with_table1(hits)
    divisors = table1_divisors()
    for h in missing:
        log.error("published row not found: %s = (%s)(%s)", h.g, h.f, h.h)
    stray = [h for h in extra if h.f not in divisors]
    for h in extra:
        kind = "divisor outside the table" if h in stray else "row not in the table"
        print(f"note: {kind}: {h.g} = ({h.f})({h.h})", file=sys.stderr)
    return EXIT_FALSIFIED if missing or stray else EXIT_OK


def cmd_corollary1(args, out) -> int:
    rep = corollary1_sweep(args.m_min, args.m_max, jobs=args.jobs)
    _dump(rep.as_dict(), out)
    print(f"elapsed: {rep.elapsed:.3f}s for {rep.total} pairs", file=sys.stderr)
    return EXIT_FALSIFIED if rep.falsified else EXIT_OK


def _parse_seed(text: str, m: int) -> list[int]:
    if text == "impulse":
        return impulse_seed(m)
    try:
        v = int(text, 16)
    except ValueError:
        raise UsageError(f"seed must be 'impulse' or hex, got {text!r}") from None
    try:
        return seed_from_int(v, m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_lfsr(args, out) -> int:
    f = _expand(args.poly)
    seed = _parse_seed(args.seed, f.degree)
    seq = generate(f, seed, args.len)
    report = {
        "poly": str(f),
        "seed": "".join(map(str, seq.seed)),
        "len": len(seq),
        "stream": seq.hex() if args.hex else seq.bitstring(),
    }
    status = EXIT_OK
    if args.check_prop2:
        mw = as_maxweight(args.poly)
        if mw is None:
            raise UsageError(f"{f} is not a maximum-weight polynomial")
        horizon = args.len - mw.m - 1
        ok = prop2_check(mw, seed, horizon)
        report["prop2"] = {"m": mw.m, "l": mw.l, "horizon": horizon, "holds": ok}
        status = EXIT_OK if ok else EXIT_FALSIFIED
    _dump(report, out)
    return status


def cmd_oa(args, out) -> int:
    f = _expand(args.poly)
    seed = _parse_seed(args.seed, f.degree)
    rep = strength_report(f, args.n, args.method, args.t_max, seed)
    d = rep.as_dict()
    primitive = is_primitive(f)
    d["primitive"] = primitive
    if args.method == "both":
        d["agree"] = rep.agree
    if not primitive:
        print(f"note: {f} is not primitive; a single sequence's windows need not form "
              "a linear code, so the two methods are not guaranteed to agree", file=sys.stderr)
    _dump(d, out)
    return EXIT_OK if rep.agree else EXIT_FALSIFIED


def cmd_mw_enum(args, out) -> int:
    rows = []
    for p in enumerate_mw(args.m):
        rep = classify(p.poly)
        obstruction = gcd_obstruction(p)
        rows.append({
            "m": p.m,
            "l": p.l,
            "poly": str(p.poly),
            "hex": p.poly.hex(),
            "irreducible": rep.irreducible,
            "primitive": rep.primitive,
            "period": rep.period,
            "gcd_factor": None if obstruction is None else str(obstruction),
        })
    _dump(rows, out)
    return EXIT_OK


def _poly_arg(s: str):
    try:
        return parse_poly_spec(s)
    except PolySpecError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="mwpoly",
        description="GF(2) polynomial tools for trinomial multiples of maximum-weight "
        "polynomials and orthogonal arrays from shift-register sequences.",
        epilog="Polynomials: 'x^5+x^4+1', hex '0x31' (bit i = coefficient of x^i), "
        "or 'mw:m,l'. Set MWPOLY_LOG=error|info|debug for diagnostics.",
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="irreducibility, primitivity, period")
    c.add_argument("--poly", type=_poly_arg, required=True)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser(
        "search",
        help="trinomial multiples x^a+x^b+1 of a polynomial",
        description="List every trinomial x^a+x^b+1 with 0<b<a<=max-deg divisible by "
        "the polynomial. Trinomials are reported with constant term 1: when f(0)=1, "
        "x^c*g is a multiple exactly when g is.",
    )
    c.add_argument("--poly", type=_poly_arg, required=True)
    c.add_argument("--max-deg", type=int, required=True)
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("table1", help="exhaustive exception table for m in {3,5,7}")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.set_defaults(func=cmd_table1)

    c = sub.add_parser("corollary1", help="no trinomial multiples of degree <= 2m for m > 7")
    c.add_argument("--m-min", type=int, required=True)
    c.add_argument("--m-max", type=int, required=True)
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_corollary1)

    c = sub.add_parser("lfsr", help="generate a shift-register sequence")
    c.add_argument("--poly", type=_poly_arg, required=True)
    c.add_argument("--seed", default="impulse", help="'impulse' or hex (bit i = a_i)")
    c.add_argument("--len", type=int, required=True)
    c.add_argument("--hex", action="store_true", help="emit the stream as hex (bit i = a_i)")
    c.add_argument("--check-prop2", action="store_true",
                   help="check a_{n+m} = a_{n-1} + a_{n-1+l} + a_{n+l} over the stream")
    c.set_defaults(func=cmd_lfsr)

    c = sub.add_parser("oa", help="orthogonal-array strength of the window code")
    c.add_argument("--poly", type=_poly_arg, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--method", choices=("direct", "dual", "both"), default="both")
    c.add_argument("--t-max", type=int, default=4)
    c.add_argument("--seed", default="impulse")
    c.set_defaults(func=cmd_oa)

    c = sub.add_parser("mw-enum", help="list and classify MW(m, l) for l = 1..m-1")
    c.add_argument("--m", type=int, required=True)
    c.set_defaults(func=cmd_mw_enum)
    return p


def _setup_logging() -> None:
    level = os.environ.get("MWPOLY_LOG", "error").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.ERROR),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv=None, out=None) -> int:
    _setup_logging()
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    for name in ("max_deg", "len", "n", "t_max", "jobs", "m"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args, out)
    except NotPrimitive as exc:
        print(f"error: precondition: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError, ZeroDivisionError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv=None) -> tuple[int, str]:
    """Run the CLI in-process and capture standard output."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
