"""Command-line interface.

Exit status: 0 on success (including the expected empty results), 1 when a
check fails or a search is undetermined, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import certify
from .arith import PrimeBasis, decompose
from .descent import search_quartic
from .errors import (CapExceeded, CapRequired, HorizonExhausted, NotSmooth,
                     VerificationError)
from .pipeline import euclid_witness, run_proof_demo, verify_no_mono_smooth_triple
from .schur import (Coloring, TripleMode, constant_rule, find_monochromatic_triple,
                    guaranteed_triple, parity_rule, residue_rule, schur_number)

OUTPUT_DIR_ENV = "SCHUREUCLID_OUTPUT_DIR"

COLORING_HELP = """\
Coloring files are JSON objects {"t": T, "n": N, "colors": [...]}: colors[i]
is the color, in [0, T), of the integer i + 1."""


class _Failure(Exception):
    """Maps to exit status 1."""


class _Usage(Exception):
    """Maps to exit status 2."""


def _basis(text):
    try:
        return PrimeBasis.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _mode(text):
    try:
        return TripleMode.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rule(text):
    if text == "const":
        return text, constant_rule
    if text == "parity":
        return text, parity_rule
    if text.startswith("mod") and text[3:].isdigit() and int(text[3:]) >= 1:
        return text, residue_rule(int(text[3:]))
    raise argparse.ArgumentTypeError(f"rule must be const, parity or modK, got {text!r}")


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


class _Output:
    def __init__(self, args, default_format):
        self.format = args.format or default_format
        self.command = args.command
        folder = args.output_dir or os.environ.get(OUTPUT_DIR_ENV)
        self.folder = Path(folder) if folder else None

    def emit(self, doc, plain: str):
        if self.folder is not None and doc is not None:
            self.folder.mkdir(parents=True, exist_ok=True)
            (self.folder / f"{self.command}.json").write_text(_dump(doc) + "\n")
        print(_dump(doc) if self.format == "json" else plain)


def cmd_schur(args, out):
    try:
        cert = schur_number(args.colors, args.mode, cap=args.cap, order=args.order)
    except CapExceeded as exc:
        raise _Failure(str(exc)) from None
    doc = cert.to_dict()
    plain = (f"S = {cert.s_value} for t = {cert.t} ({cert.mode.value}); "
             f"[1, {cert.searched_through}] admits no admissible coloring\n"
             f"witness: {' '.join(map(str, cert.witness.colors))}")
    out.emit(doc, plain)


def cmd_triple(args, out):
    try:
        doc = json.loads(Path(args.coloring).read_text())
        coloring = Coloring.from_dict(doc)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise _Usage(f"--coloring: cannot read {args.coloring}: {exc}") from None
    triple = find_monochromatic_triple(coloring, args.mode)
    if triple is None:
        out.emit(None, f"none: coloring of [1, {coloring.n}] is admissible ({args.mode})")
    else:
        out.emit(triple.to_dict(), f"{triple.a} + {triple.b} = {triple.c} (color {triple.color})")


def cmd_select(args, out):
    name, fn = args.rule
    try:
        triple = guaranteed_triple(fn, args.colors, args.mode, cap=args.cap)
    except CapRequired as exc:
        raise _Usage(f"--cap: {exc}") from None
    except HorizonExhausted as exc:
        raise _Failure(str(exc)) from None
    except ValueError as exc:
        raise _Usage(f"--rule: {exc}") from None
    doc = dict(triple.to_dict(), rule=name, t=args.colors)
    out.emit(doc, f"{triple.a} + {triple.b} = {triple.c} (color {triple.color})")


def cmd_decompose(args, out):
    try:
        d = decompose(args.m, args.basis)
    except NotSmooth as exc:
        raise _Failure(str(exc)) from None
    doc = d.to_dict(args.basis)
    plain = (f"{d.m} = {d.u}^4 * {d.mantissa}  residues {list(d.residues)}  "
             f"index {d.index}")
    out.emit(doc, plain)


def cmd_witness(args, out):
    w = euclid_witness(args.basis)
    out.emit(w.to_dict(), str(w.witness))


def cmd_sweep_triples(args, out):
    if args.bound < 3:
        raise _Usage("--bound: must be >= 3")
    report = verify_no_mono_smooth_triple(args.basis, args.bound, args.mode)
    plain = (f"{len(report.violations)} violations among "
             f"{report.triples_examined} smooth triples <= {args.bound}")
    out.emit(report.to_dict(), plain)
    if report.violations:
        raise _Failure(f"same-mantissa triples found: {report.violations}")


def cmd_sweep_quartic(args, out):
    sols = search_quartic(args.zmax, workers=args.workers)
    doc = {
        "z_max": args.zmax,
        "solutions": [list(s.as_tuple()) for s in sols],
        "elapsed_note": f"exhaustive scan of 1 <= y < z <= {args.zmax}, exact integer square roots",
    }
    out.emit(doc, f"{len(sols)} solutions")
    if sols:
        raise _Failure(f"solutions found: {doc['solutions']}")


def cmd_demo(args, out):
    if args.bound < 3:
        raise _Usage("--bound: must be >= 3")
    report = run_proof_demo(args.basis, args.bound)
    out.emit(report.to_dict(), report.narrative())
    if report.sweep.violations:
        raise _Failure("same-mantissa triples found")


def verify_bytes(data: bytes, refute: bool = True) -> str:
    """Parse and check one certificate file's contents, as ``verify`` does."""
    try:
        doc = json.loads(data)
    except ValueError as exc:
        raise VerificationError(f"certificate is not valid JSON: {exc}") from None
    try:
        if certify.classify(doc) == "schur":
            return certify.verify_schur(doc, refute=refute)
        return certify.verify_document(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise VerificationError(f"malformed certificate: {exc!r}") from None


def cmd_verify(args, out):
    try:
        data = Path(args.certificate).read_bytes()
    except OSError as exc:
        raise _Usage(f"--certificate: {exc}") from None
    try:
        summary = verify_bytes(data, refute=not args.skip_refutation)
    except VerificationError as exc:
        raise _Failure(f"verification failed: {exc}") from None
    out.emit({"verified": True, "summary": summary}, f"OK {summary}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json"), default=None,
                        help="output format (default: json for schur, plain otherwise)")
    common.add_argument("--output-dir", default=None,
                        help=f"also write the JSON document to DIR/<command>.json "
                             f"(default: ${OUTPUT_DIR_ENV} if set)")

    parser = argparse.ArgumentParser(
        prog="schureuclid",
        description="Schur numbers, mantissa pigeonholing and the Fermat quartic.",
        epilog=COLORING_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, **kw):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text, **kw)
        p.set_defaults(func=func)
        return p

    p = add("schur", cmd_schur, "exact Schur number with certificate")
    p.add_argument("--colors", type=_positive, required=True)
    p.add_argument("--mode", type=_mode, default=TripleMode.WEAK)
    p.add_argument("--cap", type=_positive, default=200)
    p.add_argument("--order", choices=("ascending", "descending"), default="ascending",
                   help="color branching order")

    p = add("triple", cmd_triple, "first monochromatic triple of a coloring file",
            epilog=COLORING_HELP)
    p.add_argument("--coloring", required=True, metavar="FILE")
    p.add_argument("--mode", type=_mode, default=TripleMode.WEAK)

    p = add("select", cmd_select, "select a monochromatic triple from a coloring rule")
    p.add_argument("--rule", type=_rule, required=True, help="const, parity or modK")
    p.add_argument("--colors", type=_positive, required=True)
    p.add_argument("--mode", type=_mode, default=TripleMode.WEAK)
    p.add_argument("--cap", type=_positive, default=None,
                   help="horizon (default: certified S(t) + 1)")

    p = add("decompose", cmd_decompose, "m = u^4 * mantissa over a prime basis")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--basis", type=_basis, required=True, help="e.g. 2,3,5")

    p = add("witness", cmd_witness, "least prime outside a basis")
    p.add_argument("--basis", type=_basis, required=True)

    p = add("sweep-triples", cmd_sweep_triples, "same-mantissa smooth a + b = c sweep")
    p.add_argument("--basis", type=_basis, required=True)
    p.add_argument("--bound", type=_positive, required=True)
    p.add_argument("--mode", type=_mode, default=TripleMode.WEAK)

    p = add("sweep-quartic", cmd_sweep_quartic, "refute z^4 - y^4 = x^2 for z <= ZMAX")
    p.add_argument("--zmax", type=_positive, required=True)
    p.add_argument("--workers", type=_positive, default=1)

    p = add("demo", cmd_demo, "end-to-end run over a pretend-complete basis")
    p.add_argument("--basis", type=_basis, required=True)
    p.add_argument("--bound", type=_positive, required=True)

    p = add("verify", cmd_verify, "independently re-check an emitted certificate")
    p.add_argument("--certificate", required=True, metavar="FILE")
    p.add_argument("--skip-refutation", action="store_true",
                   help="for Schur certificates, skip re-refuting length S + 1")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Output(args, "json" if args.command == "schur" else "plain")
    try:
        args.func(args, out)
    except _Usage as exc:
        print(f"schureuclid {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except _Failure as exc:
        print(f"schureuclid {args.command}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
