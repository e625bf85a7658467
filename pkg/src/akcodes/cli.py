"""Command-line front end: ``akcodes <command> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import specfile
from .codes import AdditiveCode, dual, is_theta_cyclic, min_distance
from .constructions import (
    ConstructionError,
    construct_even,
    construct_from_ap,
    construct_odd,
    cyclic_code,
)
from .gf2 import BinaryCode, DistanceInfeasible, word_from_str
from .gray import IndexPermutation
from .report import bundled_table, check_spec, check_specs, format_text, format_tsv
from .ring import format_subset, parse_subset
from .specfile import CodeSpec, SpecParseError


class CliError(Exception):
    pass


def _load(path: str) -> CodeSpec:
    return specfile.load(path)


def _summary(spec: CodeSpec, C) -> str:
    lines = [f"name: {spec.name}", f"n: {C.n}", f"k: {C.k}", f"S: {format_subset(spec.S)}"]
    if isinstance(C, AdditiveCode):
        lines.append(f"cardinality: {C.cardinality} (2^{C.log2_size})")
        lines.append("structure: additive (F2-linear, not A_k-linear)")
    else:
        lines.append(f"cardinality: {C.cardinality} (2^{C.log2_size})")
        lines.append("component dims: " + " ".join(str(d) for d in C.dims))
    return "\n".join(lines) + "\n"


def cmd_build(args) -> int:
    spec = _load(args.file)
    C = spec.build()
    sys.stdout.write(_summary(spec, C))
    return 0


def cmd_check(args) -> int:
    row = check_spec(_load(args.file))
    sys.stdout.write(format_text([row]) if args.format == "text" else format_tsv([row]))
    return 0 if row.ok else 1


def cmd_verify_table(args) -> int:
    specs = specfile.load_all(args.file) if args.file else bundled_table()
    rows = check_specs(specs, jobs=args.jobs)
    sys.stdout.write(format_text(rows) if args.format == "text" else format_tsv(rows))
    bad = [r for r in rows if not r.ok]
    for r in bad:
        print(f"mismatch: {r.name}: " + "; ".join(r.notes), file=sys.stderr)
    return 0 if not bad else 1


def _binary_input(text: str, length: int | None) -> BinaryCode:
    """``g=1+x+x^3`` (cyclic, needs a length) or ``w=0011,1100`` (basis rows)."""
    if text.startswith("g="):
        if length is None:
            raise CliError("a generator-polynomial input needs --length")
        return cyclic_code(text[2:], length)
    if text.startswith("w="):
        words = [w for w in text[2:].split(",") if w.strip()]
        if not words:
            raise CliError(f"no words in {text!r}")
        n = len(words[0].strip())
        if any(len(w.strip()) != n for w in words):
            raise CliError(f"words of unequal length in {text!r}")
        return BinaryCode.span(n, (word_from_str(w) for w in words))
    if text == "zero" or text == "full":
        if length is None:
            raise CliError(f"input {text!r} needs --length")
        return BinaryCode.zero(length) if text == "zero" else BinaryCode.full(length)
    raise CliError(f"binary input must look like g=POLY, w=WORD,WORD, zero or full: {text!r}")


def cmd_construct(args) -> int:
    S = parse_subset(args.S)
    if args.kind == "even":
        codes = [_binary_input(t, args.length) for t in args.inputs]
        C = construct_even(codes, S)
    elif args.kind == "odd":
        if args.k is None:
            raise CliError("construct odd needs --k")
        codes = [_binary_input(t, args.length) for t in args.inputs]
        C = construct_odd(codes, S, args.k)
    else:
        if args.k is None:
            raise CliError("construct from-ap needs --k")
        p = args.p if args.p is not None else (min(S) - 1 if S else 0)
        if p == 0:
            codes = [_binary_input(t, args.length) for t in args.inputs]
        else:
            codes = []
            for path in args.inputs:
                C_in = _load(path).build()
                if isinstance(C_in, AdditiveCode) or C_in.k != p:
                    raise CliError(f"{path}: expected a linear code over A_{p}")
                codes.append(C_in)
        mu = IndexPermutation(tuple(int(x) for x in args.mu.split(","))) if args.mu else None
        C = construct_from_ap(codes, S, args.k, mu=mu, p=p)
    if isinstance(C, AdditiveCode) and C.is_linear():
        C = C.to_code()
    out = specfile.spec_from_code(C, args.name, S=S)
    text = out.dumps()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    print(f"theta-cyclic for S={format_subset(S)}: {'yes' if is_theta_cyclic(C, S) else 'no'}",
          file=sys.stderr)
    return 0


def cmd_dual(args) -> int:
    spec = _load(args.file)
    C = spec.build()
    if isinstance(C, AdditiveCode):
        raise CliError("duals are defined here for A_k-linear codes only")
    T = parse_subset(args.T, C.k)
    D = dual(C, T)
    out = specfile.spec_from_code(D, f"{spec.name}-dual", S=spec.S, T=T)
    sys.stdout.write(out.dumps())
    print(f"log2|C| = {C.log2_size}, log2|dual| = {D.log2_size}, self-dual: "
          f"{'yes' if D == C else 'no'}", file=sys.stderr)
    return 0


def cmd_distance(args) -> int:
    C = _load(args.file).build()
    try:
        d = min_distance(C, args.method)
    except DistanceInfeasible as e:
        print(f"infeasible: {e}")
        return 2
    print(d)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="akcodes", description="Skew-cyclic codes over A_k")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a code and print its size and components")
    p.add_argument("file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="check skew-cyclicity, self-duality and distance")
    p.add_argument("file")
    p.add_argument("--format", choices=("tsv", "text"), default="tsv")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify-table", help="check every record of a table file (bundled by default)")
    p.add_argument("file", nargs="?")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is fixed)")
    p.add_argument("--format", choices=("tsv", "text"), default="tsv")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("construct", help="build a skew-cyclic code from component codes")
    p.add_argument("kind", choices=("even", "odd", "from-ap"))
    p.add_argument("inputs", nargs="+",
                   help="binary inputs (g=POLY, w=WORD,..., zero, full) or, for from-ap with p>0, spec files")
    p.add_argument("--S", required=True, help="twist subset, e.g. 1,2 or empty")
    p.add_argument("--k", type=int, help="ring level (odd and from-ap)")
    p.add_argument("--p", type=int, help="from-ap only; defaults to min(S)-1")
    p.add_argument("--mu", help="from-ap only; permutation images, e.g. 2,1")
    p.add_argument("--length", type=int, help="length for g=POLY, zero and full inputs")
    p.add_argument("--name", default="constructed")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("dual", help="print the Hermitian dual w.r.t. H_T as a spec")
    p.add_argument("file")
    p.add_argument("--T", default="empty")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("distance", help="minimum A_k-Hamming distance")
    p.add_argument("file")
    p.add_argument("--method", choices=("components", "brute", "gray"), default="components")
    p.set_defaults(func=cmd_distance)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecParseError, ConstructionError, CliError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
