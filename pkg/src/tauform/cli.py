"""Command-line entry point: ``tauform {tau,verify,local,curve}``.

Exit codes: 0 success, 1 verification failure, 2 bad arguments or
configuration, 3 inconclusive local certificate.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import congruence, elliptic, padic, tau
from .report import dump_reports

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_INCONCLUSIVE = 3

VERIFY_LAWS = ("conjecture-one", "deligne", "eigenform", *congruence.LAWS)
CACHE_ENV = "TAU_TABLE_CACHE"


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    out: str = None


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def _polynomial(text):
    try:
        return padic.IntPolynomial.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def load_table(max_n):
    """tau table of at least ``max_n`` entries, via the cache directory when configured."""
    cache = os.environ.get(CACHE_ENV)
    if not cache:
        return tau.compute_tau_table(max_n)
    directory = Path(cache)
    directory.mkdir(parents=True, exist_ok=True)
    best = None
    for path in directory.glob("tau-*.txt"):
        try:
            size = int(path.stem.split("-", 1)[1])
        except ValueError:
            continue
        if size >= max_n and (best is None or size < best[0]):
            best = (size, path)
    if best is not None:
        with best[1].open() as fh:
            return tau.read_table(fh).truncate(max_n)
    table = tau.compute_tau_table(max_n)
    target = directory / f"tau-{max_n}.txt"
    tmp = target.with_suffix(".tmp")
    with tmp.open("w") as fh:
        tau.write_table(table, fh)
    tmp.replace(target)
    return table


def cmd_tau(args, out):
    if args.table is not None:
        if args.n is not None:
            raise ConfigError("give either n or --table, not both")
        if args.out is None:
            raise ConfigError("--table needs --out")
        table = load_table(args.table)
        with open(args.out, "w") as fh:
            tau.write_table(table, fh)
        return EXIT_OK
    if args.n is None:
        raise ConfigError("give n or --table MAX_N")
    out.write(f"{load_table(args.n)[args.n]}\n")
    return EXIT_OK


def _verify_reports(law, pmax, max_n):
    if law == "conjecture-one":
        return tau.verify_conjecture_one(load_table(pmax))
    if law == "deligne":
        return tau.verify_deligne_bound(load_table(pmax))
    if law == "eigenform":
        max_n = max_n or max(10 * pmax, 100)
        if max_n < 2 * pmax:
            raise ConfigError(f"--max-n {max_n} too small for primes up to {pmax}")
        return tau.verify_eigenform(load_table(max_n), pmax)
    return congruence.verify_congruence(congruence.LAWS[law], load_table(pmax), pmax)


def cmd_verify(args, out):
    if args.pmax < 2:
        raise ConfigError("--pmax must be at least 2")
    failures = dump_reports(_verify_reports(args.law, args.pmax, args.max_n), out)
    print(f"{args.law}: {failures} failures", file=sys.stderr)
    return EXIT_FAILED if failures else EXIT_OK


def cmd_local(args, out):
    try:
        if args.mode == "roots":
            cert = padic.has_root_in_zp(args.poly, args.p, effort=args.precision)
            out.write(cert.to_json() + "\n")
            return EXIT_OK if cert.conclusive else EXIT_INCONCLUSIVE
        if args.mode == "square":
            if args.value == 0:
                raise ConfigError("--value must be nonzero")
            cert = padic.is_square_in_qp(args.value, args.p, args.precision)
            out.write(cert.to_json() + "\n")
            return EXIT_OK
        witness = padic.hensel_lift(args.poly, args.p, args.start, args.precision)
        record = {
            "p": args.p,
            "poly": args.poly.to_text(),
            "start": str(args.start),
            "precision": args.precision,
            "witness": str(witness),
        }
        out.write(json.dumps(record, separators=(",", ":")) + "\n")
        return EXIT_OK
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def cmd_curve(args, out):
    try:
        E = elliptic.CurveSpec(args.a, args.b)
    except elliptic.SingularCurveError as exc:
        raise ConfigError(str(exc)) from None
    for rec in elliptic.ap_sweep(E, args.pmax):
        out.write(rec.to_json() + "\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="tauform", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_tau = sub.add_parser("tau", help="print tau(n) or write a table")
    p_tau.add_argument("n", nargs="?", type=_positive_int)
    p_tau.add_argument("--table", type=_positive_int, metavar="MAX_N")
    p_tau.add_argument("--out")
    p_tau.set_defaults(func=cmd_tau)

    p_verify = sub.add_parser("verify", help="sweep a law and emit JSON-lines reports")
    p_verify.add_argument("law", choices=VERIFY_LAWS)
    p_verify.add_argument("--pmax", type=_positive_int, required=True)
    p_verify.add_argument("--max-n", type=_positive_int, help="table size for eigenform")
    p_verify.set_defaults(func=cmd_verify)

    p_local = sub.add_parser("local", help="p-adic certificates")
    local = p_local.add_subparsers(dest="mode", required=True)
    roots = local.add_parser("roots")
    roots.add_argument("--p", type=_positive_int, required=True)
    roots.add_argument("--poly", type=_polynomial, required=True)
    roots.add_argument("--precision", type=_positive_int, default=8)
    square = local.add_parser("square")
    square.add_argument("--p", type=_positive_int, required=True)
    square.add_argument("--value", type=_rational, required=True)
    square.add_argument("--precision", type=_positive_int, default=10)
    hensel = local.add_parser("hensel")
    hensel.add_argument("--p", type=_positive_int, required=True)
    hensel.add_argument("--poly", type=_polynomial, required=True)
    hensel.add_argument("--start", type=int, required=True)
    hensel.add_argument("--precision", type=_positive_int, required=True)
    p_local.set_defaults(func=cmd_local)

    p_curve = sub.add_parser("curve", help="reduction data of y^2 = x^3 + ax + b")
    p_curve.add_argument("--a", type=int, required=True)
    p_curve.add_argument("--b", type=int, required=True)
    p_curve.add_argument("--pmax", type=_positive_int, required=True)
    p_curve.set_defaults(func=cmd_curve)
    return parser


def run_config(args):
    params = {k: v for k, v in vars(args).items() if k not in ("func", "command", "out")}
    return RunConfig(args.command, params, getattr(args, "out", None))


_GLUED = ("--poly", "--value", "--a", "--b", "--start")


def _glue_values(argv):
    # "--poly -2,0,1" would otherwise read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _GLUED:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args, out)
    except ConfigError as exc:
        print(f"tauform: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
