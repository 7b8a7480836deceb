"""Command-line workbench.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or parse error,
3 enumeration limit or overflow, 4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bijection import mapping_record
from .checkmark import from_checkmarks, parse_checkmarks, to_checkmarks
from .enumeration import (
    Scheme,
    closed_form_polynomial,
    enumerate_paths,
    verify,
    weight_polynomial,
)
from .errors import ArithmeticOverflow, LimitExceeded, MalformedPair, WordError
from .path import Lattice, heights, parse_word
from .render import RenderSpec, render
from .weighting import bibanded_monomial, format_ab, format_m, peak_monomial

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3
EXIT_IO = 4


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(", ", ": "))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"n must be at least 1, got {value}")
    return value


def _resolve(args, name: str, default=None):
    opt = getattr(args, f"{name}_opt", None)
    pos = getattr(args, name, None)
    if opt is not None and pos is not None and opt != pos:
        raise UsageError(f"conflicting values for {name}: {pos} and {opt}")
    value = opt if opt is not None else pos
    return default if value is None else value


def _path(text: str):
    return heights(parse_word(text))


def cmd_enumerate(args, out) -> int:
    n = _resolve(args, "n")
    if n is None:
        raise UsageError("enumerate needs n")
    lattice = Lattice.parse(_resolve(args, "lattice", "dyck"))
    for p in enumerate_paths(n, lattice):
        if args.format == "json":
            rec = p.to_json()
            if args.weights:
                rec["bibanded"] = bibanded_monomial(p).to_json()
                rec["peaks"] = peak_monomial(p).to_json()
            out.write(_dump(rec) + "\n")
        elif args.weights:
            out.write(f"{p}  {bibanded_monomial(p)}  {peak_monomial(p)}\n")
        else:
            out.write(f"{p}\n")
    return EXIT_OK


def cmd_map(args, out) -> int:
    rec = mapping_record(_path(args.word), inverse=args.inverse)
    if args.format == "json":
        out.write(_dump(rec) + "\n")
    else:
        ab = format_ab(rec["bibanded"]["exp_a"], rec["bibanded"]["exp_b"])
        m = format_m(rec["peaks"]["exp_m"])
        arrow = "<-" if args.inverse else "->"
        out.write(f"{rec['input']} {arrow} {rec['image']}  ({ab} <-> {m})\n")
    return EXIT_OK


def cmd_checkmarks(args, out) -> int:
    if (args.word is None) == (args.pair is None):
        raise UsageError("give exactly one of WORD or --pair")
    if args.word is not None:
        p = _path(args.word)
        pair = to_checkmarks(p)
    else:
        pair = parse_checkmarks(args.pair)
        p = from_checkmarks(pair)
    if args.format == "json":
        rec = dict(pair.to_json(), word=str(p), text=pair.to_text(), dyck=p.is_dyck)
        out.write(_dump(rec) + "\n")
    else:
        out.write(f"{p}  {pair.to_text()}\n")
    return EXIT_OK


def cmd_poly(args, out) -> int:
    n = _resolve(args, "n")
    if n is None:
        raise UsageError("poly needs n")
    lattice = Lattice.parse(_resolve(args, "lattice", "dyck"))
    scheme = Scheme.parse(_resolve(args, "scheme", "bibanded"))
    if args.source == "closed-form":
        poly = closed_form_polynomial(n, lattice, scheme)
    else:
        poly = weight_polynomial(n, lattice, scheme)
    if args.format == "json":
        out.write(_dump(poly.to_json()) + "\n")
    else:
        out.write(poly.to_text() + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    n_max = _resolve(args, "n")
    if n_max is None:
        raise UsageError("verify needs n")
    which = _resolve(args, "lattice", "both")
    lattices = [Lattice.DYCK, Lattice.BILATERAL] if which == "both" else [Lattice.parse(which)]
    scheme_arg = _resolve(args, "scheme", "both")
    schemes = list(Scheme) if scheme_arg == "both" else [Scheme.parse(scheme_arg)]
    reports = []
    for lattice in lattices:
        for scheme in schemes:
            reports.extend(verify(range(1, n_max + 1), lattice, scheme))
    for r in reports:
        if args.format == "json":
            out.write(_dump(r.to_json()) + "\n")
        else:
            status = "error" if r.error else ("ok" if r.match else "MISMATCH")
            out.write(f"n={r.n} {r.lattice.value} {r.scheme.value}: {status} "
                      f"paths={r.path_count}\n")
    errors = sum(1 for r in reports if r.error)
    matched = sum(1 for r in reports if r.match)
    mismatched = len(reports) - matched - errors
    summary = {"reports": len(reports), "match": matched, "mismatch": mismatched,
               "errors": errors, "paths": sum(r.path_count for r in reports)}
    if args.format == "json":
        out.write(_dump({"summary": summary}) + "\n")
    else:
        out.write("summary: " + " ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    if errors:
        return EXIT_LIMIT
    return EXIT_OK if mismatched == 0 else EXIT_MISMATCH


def cmd_render(args, out) -> int:
    spec = RenderSpec(
        format="svg" if args.svg else "ascii",
        show_bands=args.bands,
        show_peaks=args.peaks,
        show_checkmarks=args.checkmarks,
        cell_size=args.cell,
    )
    text = render(_path(args.word), spec)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_IO
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="pathforge", description=__doc__.splitlines()[0],
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def sized(p):
        p.add_argument("n", nargs="?", type=_positive)
        p.add_argument("--n", dest="n_opt", type=_positive)

    p = sub.add_parser("enumerate", parents=[common], help="list every path of length 2n")
    sized(p)
    p.add_argument("lattice", nargs="?", choices=["dyck", "bilateral"])
    p.add_argument("--lattice", dest="lattice_opt", choices=["dyck", "bilateral"])
    p.add_argument("--weights", action="store_true", help="append both monomials")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", parents=[common], help="push a path through the bijection")
    p.add_argument("word")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("checkmarks", parents=[common], help="convert word <-> checkmark pair")
    p.add_argument("word", nargs="?")
    p.add_argument("--pair", help='checkmark text such as "NW=.^^;SW=^."')
    p.set_defaults(func=cmd_checkmarks)

    p = sub.add_parser("poly", parents=[common], help="weight polynomial")
    sized(p)
    p.add_argument("lattice", nargs="?", choices=["dyck", "bilateral"])
    p.add_argument("scheme", nargs="?", choices=["bibanded", "peaks"])
    p.add_argument("--lattice", dest="lattice_opt", choices=["dyck", "bilateral"])
    p.add_argument("--scheme", dest="scheme_opt", choices=["bibanded", "peaks"])
    p.add_argument("--source", choices=["enumerate", "closed-form"], default="enumerate")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", parents=[common],
                       help="compare enumerated and closed-form polynomials for 1..n")
    sized(p)
    p.add_argument("lattice", nargs="?", choices=["dyck", "bilateral", "both"])
    p.add_argument("--lattice", dest="lattice_opt", choices=["dyck", "bilateral", "both"])
    p.add_argument("--scheme", dest="scheme_opt", choices=["bibanded", "peaks", "both"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=[common], help="draw a path as ASCII or SVG")
    p.add_argument("word")
    p.add_argument("--svg", action="store_true", help="emit SVG instead of ASCII")
    p.add_argument("--bands", action="store_true", help="shade odd bands")
    p.add_argument("--peaks", action="store_true", help="mark peaks")
    p.add_argument("--checkmarks", action="store_true", help="label the bounding box")
    p.add_argument("--cell", type=int, default=20, help="SVG pixels per lattice unit")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        return args.func(args, out)
    except (LimitExceeded, ArithmeticOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (WordError, MalformedPair, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
