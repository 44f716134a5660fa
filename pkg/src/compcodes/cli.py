"""Command-line front end.

Exit status: 0 for success / feasible / true, 1 for infeasible / false /
no construction, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, TextIO

from .approx import approx_optimal
from .code_model import (Code, Composition, CompositionMultiset, CostModel, Distribution,
                         InvalidInputError, average_cost, is_fix_free,
                         is_prefix_free, is_suffix_free, is_uniquely_decodable)
from .feasibility import check_prefix_feasibility
from .fixfree_builder import build_fix_free
from .prefix_builder import Infeasible, NotApplicable, Success, build_prefix_free


class ParseError(Exception):
    def __init__(self, path: str, line: int, col: int, msg: str):
        super().__init__(f"{path}:{line}:{col}: {msg}")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, raw


def _tokens(raw: str):
    """Whitespace-separated tokens with their 1-based columns."""
    col, out = 0, []
    for tok in raw.split():
        col = raw.index(tok, col)
        out.append((col + 1, tok))
        col += len(tok)
    return out


def parse_compositions(text: str, path: str = "<input>") -> CompositionMultiset:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(path, 1, 1, "empty file; expected the alphabet size")
    lineno, raw = lines[0]
    toks = _tokens(raw)
    if len(toks) != 1 or not toks[0][1].isdigit():
        raise ParseError(path, lineno, toks[0][0], "first line must be a single integer D")
    d = int(toks[0][1])
    if d < 2:
        raise ParseError(path, lineno, toks[0][0], "alphabet size must be at least 2")
    comps = []
    for lineno, raw in lines[1:]:
        toks = _tokens(raw)
        if len(toks) != d:
            raise ParseError(path, lineno, toks[min(len(toks), d) - 1][0] if toks else 1,
                             f"expected {d} counts, found {len(toks)}")
        for col, tok in toks:
            if not tok.isdigit():
                raise ParseError(path, lineno, col, f"not a nonnegative integer: {tok!r}")
        counts = tuple(int(t) for _, t in toks)
        if sum(counts) == 0:
            raise ParseError(path, lineno, toks[0][0], "empty composition")
        comps.append(Composition(counts))
    if not comps:
        raise ParseError(path, lineno, 1, "no compositions given")
    return CompositionMultiset.from_compositions(d, comps)


def format_compositions(ms: CompositionMultiset) -> str:
    lines = [str(ms.alphabet_size)]
    lines += [str(comp) for comp in ms.expanded()]
    return "\n".join(lines) + "\n"


def parse_code(text: str, path: str = "<input>", alphabet_size: Optional[int] = None) -> Code:
    words = []
    for lineno, raw in _content_lines(text):
        toks = _tokens(raw)
        if len(toks) != 1:
            raise ParseError(path, lineno, toks[1][0], "one codeword per line")
        col, tok = toks[0]
        for i, ch in enumerate(tok):
            if not ch.isdigit():
                raise ParseError(path, lineno, col + i, f"not a digit: {ch!r}")
            if alphabet_size is not None and int(ch) >= alphabet_size:
                raise ParseError(path, lineno, col + i,
                                 f"symbol {ch} outside alphabet of size {alphabet_size}")
        words.append(tuple(int(ch) for ch in tok))
    if not words:
        raise ParseError(path, 1, 1, "no codewords given")
    if alphabet_size is None:
        alphabet_size = max(2, 1 + max(max(w) for w in words))
    return Code(alphabet_size, tuple(words))


def format_code(code: Code) -> str:
    return "".join(w + "\n" for w in code.to_strings())


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def parse_rational_list(text: str) -> List[Fraction]:
    return [parse_rational(t) for t in text.split(",")]


def _format_value(value: Fraction, decimal: bool) -> str:
    return f"{float(value):.6f}" if decimal else str(value)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _cmd_check_feasible(args, out: TextIO, err: TextIO) -> int:
    ms = parse_compositions(_read(args.file), args.file)
    verdict = check_prefix_feasibility(ms)
    if verdict.feasible:
        out.write("FEASIBLE\n")
        return 0
    w = verdict.witness
    out.write("INFEASIBLE\n")
    err.write(f"violated at composition {w.composition}: {w.lhs} < {w.rhs}\n")
    return 1


def _report_build(outcome, out: TextIO, err: TextIO) -> int:
    if isinstance(outcome, Success):
        out.write(format_code(outcome.code))
        return 0
    if isinstance(outcome, Infeasible):
        err.write(f"infeasible at step {outcome.step}, composition {outcome.composition}\n")
    elif isinstance(outcome, NotApplicable):
        err.write(f"not applicable: {outcome.reason}\n")
    return 1


def _binary_compositions(args) -> CompositionMultiset:
    ms = parse_compositions(_read(args.file), args.file)
    if ms.alphabet_size != 2:
        raise InvalidInputError("builders support binary alphabets only (D = 2)")
    return ms


def _cmd_build_prefix(args, out, err) -> int:
    return _report_build(build_prefix_free(_binary_compositions(args)), out, err)


def _cmd_build_fixfree(args, out, err) -> int:
    return _report_build(build_fix_free(_binary_compositions(args)), out, err)


def _cmd_approx(args, out, err) -> int:
    result = approx_optimal(args.n, args.m, args.epsilon)
    out.write(format_code(result.code))
    err.write(f"total cost {_format_value(result.achieved_cost, args.decimal)}; "
              f"budget {_format_value(result.budget_used, args.decimal)}; "
              f"ratio bound {_format_value(result.ratio_bound, args.decimal)}\n")
    return 0


_PROPERTIES = {
    "prefix": is_prefix_free,
    "suffix": is_suffix_free,
    "fixfree": is_fix_free,
    "ud": is_uniquely_decodable,
}


def _cmd_verify(args, out, err) -> int:
    code = parse_code(_read(args.file), args.file, args.alphabet_size)
    ok = _PROPERTIES[args.property](code)
    out.write("TRUE\n" if ok else "FALSE\n")
    return 0 if ok else 1


def _cmd_cost(args, out, err) -> int:
    cm = CostModel(tuple(args.costs))
    code = parse_code(_read(args.file), args.file, len(cm.costs))
    dist = Distribution(tuple(args.probs)) if args.probs else Distribution.uniform(len(code))
    out.write(_format_value(average_cost(code, dist, cm), args.decimal) + "\n")
    return 0


def _cmd_compositions(args, out, err) -> int:
    code = parse_code(_read(args.file), args.file, args.alphabet_size)
    out.write(format_compositions(CompositionMultiset.of_code(code)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compcodes",
        description="Prefix-free and fix-free codes with prescribed codeword compositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in [
        ("check-feasible", _cmd_check_feasible, "decide if a prefix-free code exists"),
        ("build-prefix", _cmd_build_prefix, "build a binary prefix-free code"),
        ("build-fixfree", _cmd_build_fixfree, "build a binary fix-free code (distinct lengths)"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="composition file ('-' for stdin)")
        p.set_defaults(func=func)

    p = sub.add_parser("approx", help="near-optimal fix-free code for letter costs (1, m)")
    p.add_argument("--n", type=int, required=True, help="number of codewords (>= 2)")
    p.add_argument("--m", type=parse_rational, required=True, help="cost of symbol 1 (>= 1)")
    p.add_argument("--epsilon", type=parse_rational, required=True, help="budget precision")
    p.add_argument("--decimal", action="store_true", help="print costs as decimals")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("verify", help="test a code for prefix/suffix/fix-freeness or unique decodability")
    p.add_argument("--property", choices=sorted(_PROPERTIES), required=True)
    p.add_argument("--alphabet-size", type=int, default=None)
    p.add_argument("file", help="code file ('-' for stdin)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("cost", help="average codeword cost")
    p.add_argument("file", help="code file ('-' for stdin)")
    p.add_argument("--costs", type=parse_rational_list, required=True, help="c1,...,cD")
    p.add_argument("--probs", type=parse_rational_list, default=None,
                   help="p1,...,pn (default uniform)")
    p.add_argument("--decimal", action="store_true", help="print the cost as a decimal")
    p.set_defaults(func=_cmd_cost)

    p = sub.add_parser("compositions", help="print the composition file of a code")
    p.add_argument("--alphabet-size", type=int, default=None)
    p.add_argument("file", help="code file ('-' for stdin)")
    p.set_defaults(func=_cmd_compositions)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args, out, err)
    except (ParseError, InvalidInputError, OSError) as exc:
        err.write(f"error: {exc}\n")
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
