"""Command-line front end.

Exit codes: 0 success, 1 counterexamples found, 2 usage or input errors.
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
from fractions import Fraction

from .errors import QuarticError
from .forms import reduced_forms
from .gaussian import GaussianInt, classify_Q, quartic_jacobi
from .lucas import lucas_uv
from .modular import check_odd_prime, reduce_rational
from .sums import SumKind, sum_eval
from .two_squares import decompose, lemma24_normalize
from .verifier import TheoremId, VerificationReport, verify_many

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2
DEFAULT_PMAX = 1000
CSV_FIELDS = ("theorem", "prime_bound", "param_bound", "cases_checked", "cases_skipped", "counterexamples", "elapsed_ms")

_GAUSS_RE = re.compile(r"^\s*([+-]?\d+)?\s*(?:([+-])\s*(\d*)\s*i)?\s*$")
_IMAG_RE = re.compile(r"^\s*([+-]?)(\d*)\s*i\s*$")


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    try:
        num, _, den = text.partition("/")
        value = Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse rational {text!r}; expected N or N/D with D != 0") from None
    return value


def parse_gaussian(text: str) -> GaussianInt:
    """Parse 'a+bi', 'a-bi', 'bi', 'a' (also 'i', '-i', '1+i')."""
    m = _IMAG_RE.match(text)
    if m:
        return GaussianInt(0, int(m.group(1) + (m.group(2) or "1")))
    m = _GAUSS_RE.match(text)
    if not m or m.group(1) is None:
        raise UsageError(f"cannot parse Gaussian integer {text!r}; expected a+bi")
    re_part = int(m.group(1))
    im_part = 0
    if m.group(2):
        im_part = int(m.group(2) + (m.group(3) or "1"))
    return GaussianInt(re_part, im_part)


def _odd_prime_arg(text: str) -> int:
    try:
        return check_odd_prime(int(text))
    except (ValueError, QuarticError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _default_pmax() -> int:
    env = os.environ.get("QRK_PMAX_DEFAULT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"QRK_PMAX_DEFAULT={env!r} is not an integer") from None
    return DEFAULT_PMAX


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qrk", description="Quartic residues and sums of C(4k,2k) modulo primes.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def fmt(p, choices=("human", "json")):
        p.add_argument("--format", choices=choices, default="human")

    p = sub.add_parser("symbol", help="quartic Jacobi symbol ((z)/p)_4")
    p.add_argument("--p", type=_odd_prime_arg, required=True)
    p.add_argument("--z", required=True, help="Gaussian integer a+bi")
    fmt(p)

    p = sub.add_parser("classify", help="index r with c in Q_r(p)")
    p.add_argument("--p", type=_odd_prime_arg, required=True)
    p.add_argument("--c", required=True, help="N or N/D")
    fmt(p)

    p = sub.add_parser("sum", help="one of the binomial sums at x mod p")
    p.add_argument("--p", type=_odd_prime_arg, required=True)
    p.add_argument("--x", required=True, help="N or N/D")
    p.add_argument("--kind", choices=[k.value for k in SumKind], default="main")
    fmt(p)

    p = sub.add_parser("lucas", help="U_n(P,Q), V_n(P,Q) mod p")
    p.add_argument("--p", type=_odd_prime_arg, required=True)
    p.add_argument("--P-val", dest="P", required=True)
    p.add_argument("--Q-val", dest="Q", required=True)
    p.add_argument("--n", type=int, required=True)
    fmt(p)

    p = sub.add_parser("twosquares", help="q = a^2 + b^2 for a prime q = 1 mod 4")
    p.add_argument("--q", type=int, required=True)
    fmt(p)

    p = sub.add_parser("forms", help="reduced forms of a negative discriminant")
    p.add_argument("--disc", type=int, required=True)
    fmt(p)

    for name in ("verify", "verify-all"):
        p = sub.add_parser(name, help="sweep one check" if name == "verify" else "sweep every check")
        if name == "verify":
            p.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
        p.add_argument("--pmax", type=int, default=None)
        p.add_argument("--cmax", type=int, default=25)
        p.add_argument("--exhaustive", action="store_true", help="parameters range over all residues")
        p.add_argument("--jobs", type=int, default=1)
        fmt(p, ("human", "json", "csv"))
    return ap


def _emit(args, human: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _run_verify(args) -> int:
    pmax = args.pmax if args.pmax is not None else _default_pmax()
    cmax = max(pmax, args.cmax) if args.exhaustive else args.cmax
    theorems = [args.theorem] if args.verb == "verify" else list(TheoremId)
    reports = verify_many(theorems, pmax, cmax, jobs=max(1, args.jobs))
    print(format_reports(reports, args.format, single=args.verb == "verify"), end="")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_COUNTEREXAMPLE


def format_reports(reports: list[VerificationReport], fmt: str, single: bool = False) -> str:
    if fmt == "json":
        data = reports[0].to_json() if single else [r.to_json() for r in reports]
        return json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in reports:
            row = r.to_json()
            row["counterexamples"] = json.dumps(row["counterexamples"])
            w.writerow(row)
        return buf.getvalue()
    lines = []
    for r in reports:
        status = "ok  " if r.passed else "FAIL"
        lines.append(
            f"{status} {r.theorem:<7} checked={r.cases_checked} skipped={r.cases_skipped} "
            f"counterexamples={len(r.counterexamples)} elapsed={r.elapsed_ms}ms"
        )
        for c in r.counterexamples[:10]:
            lines.append(f"     p={c.p} {c.params}: expected {c.expected}, got {c.got}")
        if len(r.counterexamples) > 10:
            lines.append(f"     ... {len(r.counterexamples) - 10} more")
        lines.extend(f"     note: {n}" for n in r.notes)
    return "\n".join(lines) + "\n"


def _dispatch(args) -> int:
    if args.verb == "symbol":
        z = parse_gaussian(args.z)
        v = quartic_jacobi(z, args.p)
        _emit(args, str(v), {"p": args.p, "z": str(z), "r": v.r, "value": v.literal})
    elif args.verb == "classify":
        c = parse_rational(args.c)
        r = classify_Q(c, args.p)
        _emit(args, str(r), {"p": args.p, "c": str(c), "r": r})
    elif args.verb == "sum":
        x = reduce_rational(parse_rational(args.x), args.p)
        v = sum_eval(SumKind(args.kind), x, args.p)
        _emit(args, str(v), {"p": args.p, "x": args.x, "kind": args.kind, "value": v})
    elif args.verb == "lucas":
        if args.n < 0:
            raise UsageError("--n must be nonnegative")
        P = reduce_rational(parse_rational(args.P), args.p)
        Q = reduce_rational(parse_rational(args.Q), args.p)
        pair = lucas_uv(args.n, P, Q, args.p)
        _emit(args, f"U_{args.n}={pair.u} V_{args.n}={pair.v}", {"p": args.p, "n": args.n, "U": pair.u, "V": pair.v})
    elif args.verb == "twosquares":
        d = decompose(args.q)
        a, b = lemma24_normalize(d)
        _emit(
            args,
            f"a={d.a} b={d.b}; lemma24: a={a} b={b}",
            {"q": d.q, "a": d.a, "b": d.b, "lemma24_a": a, "lemma24_b": b},
        )
    elif args.verb == "forms":
        fs = reduced_forms(args.disc)
        _emit(args, "\n".join(map(str, fs)), {"disc": args.disc, "forms": [list(f) for f in fs]})
    else:
        return _run_verify(args)
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return _dispatch(args)
    except UsageError as e:
        print(f"qrk {args.verb}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except QuarticError as e:
        print(f"qrk {args.verb}: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"qrk {args.verb}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
