"""Divisor classes on del Pezzo surfaces and faces of the Gosset polytopes (r-4)_21.

    delpezzo count --r 6 lines
    delpezzo verify --r all --fast
    delpezzo export --r 3 --out faces.json --format json
    delpezzo orbit --r 6 "0,0,0,0,0,0,1"

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import logging
import re
import sys

from . import enumeration, gosset
from .picard import RankError, format_class, make_surface, parse_class
from .weyl import NotARootError, orbit

log = logging.getLogger("delpezzo")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# lets "-3,1,1,1" through as a positional instead of an unknown option
_LITERAL = re.compile(r"^-\d+(,-?\d+)*$|^-\d*\.\d+$")


class UsageError(Exception):
    pass


def _rank(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"r must be an integer in [3, 8], got {text!r}") from None
    if not 3 <= r <= 8:
        raise argparse.ArgumentTypeError(f"r must lie in [3, 8], got {r}")
    return r


def _rank_or_all(text: str) -> list[int]:
    if text == "all":
        return list(range(3, 9))
    return [_rank(text)]


def count(r: int, set_name: str) -> int:
    s = make_surface(r)
    name, _, arg = set_name.partition(":")
    simple = {
        "lines": enumeration.lines,
        "roots": enumeration.roots,
        "rulings": enumeration.rulings,
        "exceptional-systems": enumeration.exceptional_systems,
    }
    if name in simple and not arg:
        return len(simple[name](s))
    if name == "crosspolytopes" and not arg:
        return len(gosset.crosspolytopes(gosset.polytope(r)))
    if name in ("a-divisors", "simplexes"):
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"{name} needs an integer argument, e.g. {name}:2") from None
        try:
            if name == "a-divisors":
                return len(enumeration.a_divisors(s, n))
            return gosset.count_simplexes(gosset.polytope(r), n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError(f"unknown set {set_name!r}")


def _cmd_count(args) -> int:
    print(count(args.r, args.set))
    return EXIT_OK


def _cmd_verify(args) -> int:
    from .verify import verify

    ranks = sorted(set(args.all_ranks or []) | set(r for rs in (args.r or []) for r in rs))
    if not ranks:
        raise UsageError("verify needs --r <3..8|all> or --all")
    try:
        expected = gosset.load_expected(args.expected) if args.expected else None
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot load {args.expected}: {exc}") from None
    report = verify(ranks, deep=args.deep, expected=expected, jobs=args.jobs)
    text = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not report.passed:
        log.error("verification failed")
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_export(args) -> int:
    from .export import write_export

    try:
        write_export(args.r, args.out, args.format)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    return EXIT_OK


def _cmd_orbit(args) -> int:
    s = make_surface(args.r)
    try:
        seed = parse_class(args.cls, args.r)
        gens = [parse_class(g, args.r) for g in args.generator] or None
        result = orbit(s, seed, gens)
    except (ValueError, RankError, NotARootError) as exc:
        raise UsageError(str(exc)) from None
    print(len(result))
    for d in result:
        print(format_class(d))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="delpezzo", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print the size of a class set or face layer")
    p.add_argument("--r", type=_rank, required=True)
    p.add_argument(
        "set",
        help="lines | roots | rulings | exceptional-systems | a-divisors:A | simplexes:K | crosspolytopes",
    )
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="check every table and correspondence")
    p.add_argument("--r", type=_rank_or_all, action="append", help="3..8 or all (repeatable)")
    p.add_argument("--all", dest="all_ranks", action="store_const", const=list(range(3, 9)))
    depth = p.add_mutually_exclusive_group()
    depth.add_argument("--deep", action="store_true", help="run every layer, including r=8 cliques above k=3")
    depth.add_argument("--fast", dest="deep", action="store_false", help="skip the heavy r=8 layers (default)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--expected", help="alternative expected-values fixture (JSON)")
    p.add_argument("--jobs", type=int, default=1, help="ranks verified in parallel processes")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export", help="write the face lattice of (r-4)_21")
    p.add_argument("--r", type=_rank, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("orbit", help="Weyl orbit of a class literal d0,c1,...,cr")
    p.add_argument("--r", type=_rank, required=True)
    p.add_argument("cls", metavar="CLASS")
    p.add_argument("--generator", action="append", default=[], metavar="ROOT",
                   help="root literal to reflect in (repeatable); default: simple roots")
    p._negative_number_matcher = _LITERAL
    p.set_defaults(func=_cmd_orbit)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"delpezzo: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
