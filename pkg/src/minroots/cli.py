"""Command-line front end: ``minroots <subcommand> <matrix> ...``.

Exit codes: 0 ok, 1 usage, 2 invalid matrix, 3 resource cap or overflow,
4 verification failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter

from .brink import BrinkBuilder
from .core import MatrixParseError, ResourceLimitError, parse_system
from .cyclo import RingOverflowError
from .naive import build_table_naive
from .table import canonicalize, serialize
from .words import WordError, format_word, growth, multiply, normalize, parse_word

EXIT_OK, EXIT_USAGE, EXIT_MATRIX, EXIT_RESOURCE, EXIT_VERIFY = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="minroots", description="Minimal roots and normal forms of Coxeter groups.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def with_matrix(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("matrix", help="Coxeter matrix file")
        sp.add_argument("--max-roots", type=int, default=1_000_000)
        return sp

    b = with_matrix("build", "build and write the reflection table")
    b.add_argument("--algo", choices=("naive", "brink"), default="brink")
    b.add_argument("--out", help="write the canonical table here")
    with_matrix("stats", "root count, depth histogram and build time")
    r = with_matrix("reduce", "normal form of a word")
    r.add_argument("word")
    m = with_matrix("mult", "normal form of a product")
    m.add_argument("w1")
    m.add_argument("w2")
    g = with_matrix("growth", "number of elements of each length")
    g.add_argument("--max-len", type=int, required=True)
    v = with_matrix("verify", "cross-check builders, word engine and oracle")
    v.add_argument("--ball", type=int, default=None, help="oracle ball radius")
    return p


def _load(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise MatrixParseError(f"cannot read {path}: {e.strerror}") from None
    return parse_system(text)


def _table(cs, args, algo="brink"):
    if algo == "naive":
        return build_table_naive(cs, args.max_roots)
    return BrinkBuilder(cs, args.max_roots).run().table()


def _run(args, out) -> int:
    cs = _load(args.matrix)
    if args.cmd == "build":
        table = canonicalize(_table(cs, args, args.algo))
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(serialize(table))
        print(f"N={table.N}", file=out)
    elif args.cmd == "stats":
        t0 = time.perf_counter()
        table = _table(cs, args)
        dt = time.perf_counter() - t0
        hist = Counter(table.depth)
        print(f"N={table.N}", file=out)
        print(f"max depth {max(hist)}", file=out)
        for d in sorted(hist):
            print(f"depth {d}: {hist[d]}", file=out)
        print(f"build time {dt:.3f} s", file=out)
    elif args.cmd == "reduce":
        word = parse_word(args.word, cs.rank)
        print(format_word(normalize(_table(cs, args), word)), file=out)
    elif args.cmd == "mult":
        a, b = parse_word(args.w1, cs.rank), parse_word(args.w2, cs.rank)
        t = _table(cs, args)
        print(format_word(multiply(t, normalize(t, a), normalize(t, b))), file=out)
    elif args.cmd == "growth":
        if args.max_len < 0:
            raise _UsageError("--max-len must be non-negative")
        print(" ".join(map(str, growth(_table(cs, args), args.max_len))), file=out)
    elif args.cmd == "verify":
        from .verify import cross_check

        rep = cross_check(cs, args.ball)
        print(rep, file=out)
        return EXIT_OK if rep.passed else EXIT_VERIFY
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _run(args, out)
    except (_UsageError, WordError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MatrixParseError as e:
        print(f"invalid matrix: {e}", file=sys.stderr)
        return EXIT_MATRIX
    except (ResourceLimitError, RingOverflowError) as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
