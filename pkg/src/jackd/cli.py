"""``jackd`` command line: eta values, spectrum tables, profiles, immanants and checks."""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import checks, colored, spectra
from .errors import ConsistencyError, JackdError
from .exactalg import AlphaPoly, format_rational, parse_rational
from .jack_oracle import character_table, class_size, default_cache_dir, syt_count
from .partitions import Partition, fixed_point_free, partitions_of

FORMATS = ("plain", "json", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for failed checks here
    def error(self, message):
        raise UsageError(message)


def parse_alpha(text: str) -> Optional[Fraction]:
    if text == "sym":
        return None
    return parse_rational(text)


def render(value) -> str:
    if isinstance(value, AlphaPoly):
        return value.render()
    return format_rational(value)


def _alpha_json(alpha):
    return "sym" if alpha is None else format_rational(alpha)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--cache-dir", default=None, help="character table cache (default $JACKD_CACHE or ./.jackd-cache)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="jackd", description="Jack derangement sums and derangement graph spectra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eta", parents=[common], help="eta for one shape")
    e.add_argument("--shape", required=True)
    e.add_argument("--alpha", default="sym")
    e.add_argument("--method", choices=spectra.METHODS, default="auto")

    s = sub.add_parser("spectrum", parents=[common], help="eta and multiplicity for every shape of size n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--alpha", default="sym")
    s.add_argument("--method", choices=spectra.METHODS, default="auto")

    pr = sub.add_parser("profile", parents=[common], help="colored derangement counts by number of cycles")
    pr.add_argument("--shape", required=True)

    im = sub.add_parser("immanant", parents=[common], help="d_lam and the immanantal polynomial of K_n")
    im.add_argument("--shape", required=True)

    c = sub.add_parser("check", parents=[common], help="run an acceptance suite")
    c.add_argument("--suite", choices=sorted(checks.SUITES), default="all")
    c.add_argument("--max-n", type=int, default=None)
    return p


def cmd_eta(args) -> str:
    lam = Partition.parse(args.shape)
    alpha = parse_alpha(args.alpha)
    value = spectra.eta_value(lam, alpha, args.method)
    if args.format == "json":
        return _dump({"shape": str(lam), "alpha": _alpha_json(alpha), "method": args.method, "eta": render(value)})
    if args.format == "csv":
        return _csv(["shape", "eta"], [[str(lam), render(value)]])
    return render(value)


def cmd_spectrum(args) -> str:
    alpha = parse_alpha(args.alpha)
    table = spectra.spectrum_table(args.n, alpha, args.method)
    rows = [(str(r.shape), render(r.eta), r.mult) for r in table.rows]
    if args.format == "json":
        return _dump(
            {
                "n": args.n,
                "alpha": _alpha_json(alpha),
                "rows": [{"shape": s, "eta": v, "mult": m} for s, v, m in rows],
            }
        )
    if args.format == "csv":
        return _csv(["shape", "eta", "mult"], [[s, v, "" if m is None else m] for s, v, m in rows])
    width = max(len(s) for s, _, _ in rows)
    return "\n".join(f"{s:<{width}}  {v}" + ("" if m is None else f"  x{m}") for s, v, m in rows)


def cmd_profile(args) -> str:
    prof = colored.colored_derangement_counts(Partition.parse(args.shape))
    if args.format == "json":
        return _dump(prof.to_json())
    if args.format == "csv":
        return _csv(["k", "d"], [[k, d] for k, d in enumerate(prof.counts, 1)])
    return " ".join(str(d) for d in prof.counts)


def _d_from_table(lam: Partition, cache_dir) -> int:
    table = character_table(lam.n, cache_dir)
    return sum(class_size(mu) * table(lam, mu) for mu in partitions_of(lam.n) if fixed_point_free(mu))


def cmd_immanant(args) -> str:
    lam = Partition.parse(args.shape)
    d = spectra.d_lambda(lam)
    if lam.n <= 12:
        via_table = _d_from_table(lam, args.cache_dir or default_cache_dir())
        if via_table != d:
            raise ConsistencyError(f"character table gives {via_table}, hook products give {d}")
    poly = spectra.immanant_polynomial(lam)
    coeffs = [format_rational(c) for c in poly]
    if args.format == "json":
        return _dump({"shape": str(lam), "d": d, "f": syt_count(lam), "poly": coeffs})
    if args.format == "csv":
        return _csv(["power", "coeff"], list(enumerate(coeffs)))
    return f"d = {d}\npoly = " + " ".join(coeffs)


def cmd_check(args) -> tuple[str, int]:
    results = checks.run_suite(args.suite, args.max_n)
    ok = all(r.passed for r in results)
    if args.format == "json":
        out = _dump({"suite": args.suite, "passed": ok, "results": [r.to_json() for r in results]})
    elif args.format == "csv":
        out = _csv(
            ["name", "passed", "cases", "failures", "elapsed"],
            [[r.name, r.passed, r.cases, len(r.failures), f"{r.elapsed:.3f}"] for r in results],
        )
    else:
        out = "\n".join(r.report() for r in results)
    return out, 0 if ok else 2


COMMANDS = {"eta": cmd_eta, "spectrum": cmd_spectrum, "profile": cmd_profile, "immanant": cmd_immanant}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"jackd: {exc}", file=sys.stderr)
        return 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command == "check":
            out, code = cmd_check(args)
        else:
            out, code = COMMANDS[args.command](args), 0
    except (JackdError, ValueError, ArithmeticError) as exc:
        print(f"jackd: {exc}", file=sys.stderr)
        return 1
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
