"""Command-line front end.

Every subcommand prints JSON (or a short text rendering with
``--format text``). Exit status: 0 on success, 1 when a verified identity
fails, 2 on bad flags or configuration. Any flag may also come from a JSON
file given with ``--config``; keys are the flag names without dashes and
explicit flags win.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .algebra import CoeffTable, WindowError, ring_element_to_json
from .harness import SUITES, ALIASES, SuiteConfig, default_window, run_suite
from .operators import OperatorKind, char_polys, moment, truncation
from .paths import FAMILIES, FamilySpec, LatticePath, count, enumerate_paths, path_weight, weight_polynomial
from .series import FAMILY_TAGS, ValidityError, rational_to_series, series_from_family
from .vcf import cf_term, convergent_polys


class UsageError(Exception):
    pass


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--config", help="JSON file of flag values")
    parser.add_argument("--p", type=int, help="number of diagonals below the main one")
    parser.add_argument("--N", type=int, default=12, help="truncation order (default 12)")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", dest="mode", action="store_const", const="symbolic")
    mode.add_argument("--numeric", dest="mode", action="store_const", const="numeric")
    parser.add_argument("--seed", type=int, help="seed for a random numeric table")
    parser.add_argument("--coeffs", help="JSON coefficient table for numeric mode")
    parser.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lukas-vcf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the paths of a family")
    _common(p)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--q", type=int, default=0)

    p = sub.add_parser("weight", help="weight polynomial of a family, or of one encoded path")
    _common(p)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--path", help='single path, e.g. "UUD2", or JSON {"start": [x, y], "rises": [...]}')
    p.add_argument("--start", type=int, nargs=2, default=(0, 0), metavar=("X", "Y"))

    p = sub.add_parser("series", help="generating series of a family through z^(-N)")
    _common(p)
    p.add_argument("--tag", choices=sorted(FAMILY_TAGS))
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--q", type=int, default=0)

    p = sub.add_parser("moment", help="<M^n e_j, e_0> for a banded operator")
    _common(p)
    p.add_argument("--kind", choices=("forward", "reflected", "two_sided"), default="forward")
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int, default=0)

    p = sub.add_parser("charpoly", help="q_n and q_{n,k} of the truncated operator")
    _common(p)
    p.add_argument("--n", type=int)
    p.add_argument("--matrix", action="store_true", help="also dump the truncation H_n")

    p = sub.add_parser("cf", help="stages and convergent of the vector continued fraction")
    _common(p)
    p.add_argument("--stages", type=int, default=2)

    p = sub.add_parser("count", help="number of paths in a family")
    _common(p)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, help="for R and S: length n = m(p+1) + j")
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--q", type=int, default=0)

    p = sub.add_parser("verify", help="run identity suites")
    _common(p)
    names = sorted(SUITES) + sorted(ALIASES) + ["all"]
    p.add_argument("--suite", default="all", help="one of: " + ", ".join(names))
    p.add_argument("--tables", type=int, default=1, help="numeric mode: number of seeded tables")
    p.add_argument(
        "--tamper",
        nargs="?",
        const="default",
        help="negative control; optional COMPONENT:POSITION to alter",
    )
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: List[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not args.config:
        return args
    try:
        with open(args.config) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {args.config}: {exc}")
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    sub = parser._subparsers._group_actions[0].choices[args.command]
    known = {a.dest for a in sub._actions}
    unknown = set(data) - known
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    sub.set_defaults(**data)
    return parser.parse_args(argv)


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join("--" + n for n in missing))


def _mode(args) -> str:
    return args.mode or "symbolic"


def _table(args, bidiagonal: bool = False) -> CoeffTable:
    _require(args, "p")
    if _mode(args) == "symbolic":
        return CoeffTable.symbolic(args.p, bidiagonal)
    if args.coeffs:
        with open(args.coeffs) as fh:
            table = CoeffTable.from_json(json.load(fh))
        if table.p != args.p:
            raise UsageError("coefficient file disagrees with --p")
        return table
    if args.seed is None:
        raise UsageError("numeric mode needs --seed or --coeffs")
    return CoeffTable.random(args.p, args.seed, default_window(args.p, args.N), bidiagonal)


def _spec(args) -> FamilySpec:
    _require(args, "family", "p", "n")
    return FamilySpec(args.family, args.p, args.n, args.j, args.q).validate()


def _emit(payload, text: Optional[str], args):
    if args.format == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(payload, sort_keys=True))


# subcommands ----------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    spec = _spec(args)
    paths = list(enumerate_paths(spec))
    _emit([list(p.rises) for p in paths], "\n".join(p.encode() for p in paths), args)
    return 0


def cmd_weight(args) -> int:
    table = _table(args)
    if args.path:
        text = args.path.strip()
        path = LatticePath.from_json(json.loads(text)) if text.startswith("{") else LatticePath.decode(text, tuple(args.start))
        value = path_weight(path, table)
    else:
        value = weight_polynomial(_spec(args), table)
    _emit(ring_element_to_json(value), str(value), args)
    return 0


def cmd_series(args) -> int:
    _require(args, "tag")
    table = _table(args, bidiagonal=args.tag in ("R", "S", "T"))
    s = series_from_family(args.tag, args.j, args.q, args.N, table)
    _emit(s.to_json(), str(s), args)
    return 0


def cmd_moment(args) -> int:
    _require(args, "n")
    table = _table(args)
    kind = OperatorKind(args.kind, args.q).validate()
    value = moment(kind, args.n, args.j, table)
    _emit(ring_element_to_json(value), str(value), args)
    return 0


def cmd_charpoly(args) -> int:
    _require(args, "n")
    table = _table(args)
    pair = char_polys(args.n, table)
    payload = pair.to_json()
    if args.matrix:
        payload["matrix"] = [[ring_element_to_json(x) for x in row] for row in truncation(OperatorKind("forward"), args.n, table)]
    lines = [f"q_{args.n} = {pair.q_n}"] + [f"q_{args.n},{k} = {v}" for k, v in sorted(pair.q_nk.items())]
    _emit(payload, "\n".join(lines), args)
    return 0


def cmd_cf(args) -> int:
    table = _table(args)
    if args.stages < 1:
        raise UsageError("--stages must be at least 1")
    terms = [cf_term(k, table) for k in range(1, args.stages + 1)]
    numer, denom = convergent_polys(terms)
    payload = {
        "stages": [t.to_json() for t in terms],
        "convergent": {
            "numerators": [x.to_json() for x in numer],
            "denominator": denom.to_json(),
            "series": [rational_to_series(x, denom, args.N).to_json() for x in numer],
        },
    }
    lines = [f"stage {k}: c = {[str(c) for c in t.c]}, d = {[str(d) for d in t.d]}" for k, t in enumerate(terms, 1)]
    lines += [f"P_{i} = {x}" for i, x in enumerate(numer, 1)] + [f"Q = {denom}"]
    _emit(payload, "\n".join(lines), args)
    return 0


def cmd_count(args) -> int:
    _require(args, "family", "p")
    if args.m is not None:
        if args.family not in ("R", "S"):
            raise UsageError("--m applies to families R and S")
        args.n = args.m * (args.p + 1) + args.j
    value = count(_spec(args))
    _emit(value, str(value), args)
    return 0


def _parse_tamper(raw: Optional[str], suite: str, p: int, N: int):
    if raw is None:
        return None
    if raw != "default":
        try:
            a, b = raw.split(":")
            return (int(a), int(b))
        except ValueError:
            raise UsageError("--tamper takes COMPONENT:POSITION")
    if suite in ("kalyagin", "lemma-lft"):
        return (p - 1, 1 if suite == "kalyagin" else 0)
    if suite == "genetic":
        return (0, 1)
    return (0, max(2, N // 2))


def cmd_verify(args) -> int:
    _require(args, "p")
    suite = ALIASES.get(args.suite, args.suite)
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    mode = _mode(args)
    table_json = None
    if mode == "numeric":
        if args.coeffs:
            with open(args.coeffs) as fh:
                table_json = json.load(fh)
        elif args.seed is None:
            raise UsageError("numeric mode needs --seed or --coeffs")
    cfg = SuiteConfig(
        p=args.p,
        N=args.N,
        mode=mode,
        seed=args.seed or 0,
        tables=args.tables,
        tamper=_parse_tamper(args.tamper, suite, args.p, args.N),
        table_json=table_json,
    )
    reports = run_suite(suite, cfg)
    ok = all(r.ok for r in reports)
    payload = {"status": "pass" if ok else "fail", "reports": [r.to_json() for r in reports]}
    _emit(payload, "\n".join(str(r) for r in reports), args)
    return 0 if ok else 1


COMMANDS = {
    "enumerate": cmd_enumerate,
    "weight": cmd_weight,
    "series": cmd_series,
    "moment": cmd_moment,
    "charpoly": cmd_charpoly,
    "cf": cmd_cf,
    "count": cmd_count,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _apply_config(parser, argv)
        return COMMANDS[args.command](args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (UsageError, ValueError, KeyError, WindowError, ValidityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
