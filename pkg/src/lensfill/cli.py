"""Command line: ``lensfill {atlas,sweep,verify,eval}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from . import __version__
from .atlas import FILTERS, atlas, sweep
from .cf import Admissible, cf_eval, format_word, parse_word, suffix_continuants
from .records import CatalogueRecord, to_csv, to_table
from .topology import chain_boundary
from .verify import SUITES

JOBS_ENV = "LENSFILL_JOBS"


class UsageError(Exception):
    pass


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(records, fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(rec.to_json() + "\n")
    elif fmt == "csv":
        first = True
        for rec in records:
            out.write(to_csv([rec], header=first))
            first = False
    else:
        first = True
        for rec in records:
            if not first:
                out.write("\n")
            out.write(to_table(rec) + "\n")
            first = False


def cmd_atlas(args) -> int:
    try:
        a = atlas(args.p, args.q)
    except ValueError as e:
        raise UsageError(str(e))
    _emit([CatalogueRecord.from_atlas(a)], args.format, sys.stdout)
    return 0


def cmd_sweep(args) -> int:
    if args.max_p < 2:
        raise UsageError("--max-p must be >= 2")
    if args.out and args.out != "-":
        try:
            out = open(args.out, "w", encoding="utf-8", newline="")
        except OSError as e:
            raise UsageError(f"cannot write {args.out}: {e}")
    else:
        out = sys.stdout
    try:
        records = (CatalogueRecord.from_atlas(a)
                   for a in sweep(args.max_p, args.filter, jobs=args.jobs))
        _emit(records, args.format, out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_verify(args) -> int:
    fn = SUITES.get(args.suite)
    if fn is None:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    kwargs = {}
    if args.suite == "lemma-zero-seq":
        kwargs = dict(max_k=args.max_k or 6, max_entry=args.max_entry or 6, literal=args.literal)
    elif args.suite == "catalan":
        kwargs = dict(max_k=args.max_k or 10)
    elif args.max_p is not None:
        kwargs = dict(max_p=args.max_p)
    result = fn(**kwargs)
    print(result)
    return 0 if result.passed else 1


def cmd_eval(args) -> int:
    try:
        w = parse_word(args.word)
    except ValueError:
        raise UsageError(f"cannot parse word {args.word!r}")
    v = cf_eval(w)
    s = suffix_continuants(w)
    value = str(v.value) if isinstance(v, Admissible) else f"not admissible (S_{v.index} = 0)"
    print(f"word:        {format_word(w)}")
    print(f"value:       {value}")
    print(f"continuants: {format_word(s)}")
    print(f"chain:       {chain_boundary(w)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lensfill", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"lensfill {__version__}")
    sub = ap.add_subparsers(dest="cmd", required=True)

    formats = ["table", "json", "csv"]

    p = sub.add_parser("atlas", help="fillings of a single L(p,q)")
    p.add_argument("--format", choices=formats, default="table")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("sweep", help="catalogue every coprime (p,q) up to --max-p")
    p.add_argument("--format", choices=formats, default="json")
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--filter", choices=sorted(FILTERS), default="all")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help=f"worker processes (default ${JOBS_ENV} or 1)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("suite")
    p.add_argument("--max-p", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--max-entry", type=int)
    p.add_argument("--literal", action="store_true",
                   help="lemma-zero-seq: only require non-vanishing denominators")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="evaluate a comma-separated word")
    p.add_argument("word")
    p.set_defaults(func=cmd_eval)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"lensfill: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
