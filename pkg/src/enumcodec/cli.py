"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 on domain errors.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import diagonal, growth, numeration, pairing, real_codec, rewriting
from .errors import EncodingError

ELIDE_OVER = 40
ELIDE_KEEP = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_help()}\n{self.prog}: error: {message}")


def _nat(text: str) -> int:
    try:
        n = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return n


def _int(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None


def _alphabet(text: str) -> numeration.Alphabet:
    try:
        return numeration.Alphabet(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _code_map(text: str) -> rewriting.SubstitutionCode:
    mapping = {}
    for item in text.split(","):
        sym, sep, word = item.partition("=")
        if not sep or len(sym) != 1 or sym in mapping:
            raise argparse.ArgumentTypeError(f"bad map entry {item!r}; expected e.g. m=0,w=1")
        mapping[sym] = word
    try:
        return rewriting.SubstitutionCode.from_mapping(mapping)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _elide(s: str) -> str:
    if len(s) <= ELIDE_OVER:
        return s
    return f"{s[:ELIDE_KEEP]}...{s[-ELIDE_KEEP:]}"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="enumcodec", description="String/integer enumerations, pairing and diagonalization.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def alphabet_flag(sp):
        sp.add_argument("--alphabet", type=_alphabet, default=numeration.BINARY,
                        help="ordered symbol list, e.g. 01 or 0123456789 (default: 01)")

    sp = sub.add_parser("index", help="shortlex index of a string")
    alphabet_flag(sp)
    sp.add_argument("string")

    sp = sub.add_parser("string", help="string at a shortlex index")
    alphabet_flag(sp)
    sp.add_argument("n", type=_nat)

    sp = sub.add_parser("enumerate", help="first LIMIT strings in shortlex order")
    alphabet_flag(sp)
    sp.add_argument("limit", type=_nat)

    sp = sub.add_parser("pair", help="Cantor pairing")
    sp.add_argument("--signed", action="store_true", help="accept signed integers (zigzag)")
    sp.add_argument("x")
    sp.add_argument("y")

    sp = sub.add_parser("unpair", help="inverse Cantor pairing")
    sp.add_argument("--signed", action="store_true", help="print signed integers (zigzag)")
    sp.add_argument("z", type=_nat)

    for name, arg in (("rewrite", "string"), ("unrewrite", "bits")):
        sp = sub.add_parser(name, help=f"fixed-width substitution code ({name})")
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--map", type=_code_map, help="explicit codewords, e.g. m=0,w=1")
        g.add_argument("--alphabet", type=_alphabet, help="ordered symbols for an automatic block code")
        sp.add_argument(arg)

    sp = sub.add_parser("real", help="decimal representation codec")
    real_sub = sp.add_subparsers(dest="real_command", metavar="{encode,decode}")
    real_sub.required = True
    real_sub.add_parser("encode").add_argument("text")
    real_sub.add_parser("decode").add_argument("n", type=_nat)

    sp = sub.add_parser("diagonal", help="diagonal string of a 0/1 table file")
    sp.add_argument("--table", required=True, help="table file, '-' for standard input")
    sp.add_argument("--n", type=_nat, help="diagonal length (default: row count)")

    sp = sub.add_parser("extend", help="run the injection-extension process")
    sp.add_argument("--steps", type=_nat, required=True)

    sp = sub.add_parser("grow", help="run the sup/inf concatenation process")
    sp.add_argument("--steps", type=_nat, required=True)
    sp.add_argument("-v", "--verbose", action="store_true", help="print full strings")
    return p


def _execute(args, stdin: TextIO) -> list[str]:
    cmd = args.command
    if cmd == "index":
        return [str(numeration.shortlex_index(args.string, args.alphabet))]
    if cmd == "string":
        return [str(numeration.shortlex_string(args.n, args.alphabet))]
    if cmd == "enumerate":
        return [str(s) for s in numeration.enumerate_strings(args.alphabet, args.limit)]
    if cmd == "pair":
        conv = _int if args.signed else _nat
        try:
            x, y = conv(args.x), conv(args.y)
        except argparse.ArgumentTypeError as exc:
            raise UsageError(f"enumcodec pair: error: {exc}") from None
        fn = pairing.pair_int if args.signed else pairing.pair
        return [str(fn(x, y))]
    if cmd == "unpair":
        x, y = (pairing.unpair_int if args.signed else pairing.unpair)(args.z)
        return [f"{x} {y}"]
    if cmd in ("rewrite", "unrewrite"):
        code = args.map or rewriting.make_code(args.alphabet)
        if cmd == "rewrite":
            return [str(rewriting.rewrite(code.source.string(args.string), code))]
        return [str(rewriting.unrewrite(numeration.BINARY.string(args.bits), code))]
    if cmd == "real":
        if args.real_command == "encode":
            return [str(real_codec.encode_real(real_codec.parse_decimal(args.text)))]
        return [real_codec.render(real_codec.decode_real(args.n))]
    if cmd == "diagonal":
        try:
            if args.table == "-":
                text = stdin.read()
            else:
                with open(args.table, encoding="ascii") as fh:
                    text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"enumcodec diagonal: error: cannot read table: {exc}") from None
        table = diagonal.load_table(text)
        n = table.rows if args.n is None else args.n
        d = diagonal.diagonal_prefix(table, n)
        lines = [str(d)]
        lines += ["\t".join(map(str, w)) for w in diagonal.verify_diagonal(table, n)]
        return lines
    if cmd == "extend":
        state = diagonal.run_extension(None, args.steps)
        return [f"{label}\t{s}" for label, s in state.assignments]
    if cmd == "grow":
        out = []
        for g in growth.run_growth(args.steps):
            s = str(g.sup)
            out.append(f"{g.count}\t{len(s)}\t{s if args.verbose else _elide(s)}")
        return out
    raise UsageError(f"unknown command {cmd!r}")  # unreachable: argparse restricts choices


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
         stderr: TextIO | None = None, stdin: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        args = build_parser().parse_args(argv)
        lines = _execute(args, stdin)
    except UsageError as exc:
        print(exc, file=stderr)
        return 1
    except EncodingError as exc:
        print(f"enumcodec: error: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 1
    for line in lines:
        stdout.write(line + "\n")
    return 0


def run() -> None:
    sys.exit(main())
