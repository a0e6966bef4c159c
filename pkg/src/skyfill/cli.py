"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .core import Composition, Filling, InvalidFillingError, ParameterError, StructureError, enumerate_ssf
from .demazure import key_combinatorial, key_recursive
from .derivation import VerificationReport, bender_knuth_check, derived_fillings
from .involution import annotate, free_counts, phi_row, phi_steps
from .sweep import family, sweep


class UsageError(Exception):
    pass


def parse_filling(tokens: Sequence[str], path: str | None, shape: Composition | None) -> Filling:
    """Read a filling from ``--file`` or from the tokens given after ``--``.

    Inline, each token is one row ("-" for an empty row); a row may also be
    split with "/" inside one token. A token starting with "{" is JSON.
    """
    if path is not None and tokens:
        raise UsageError("give the filling either with --file or inline, not both")
    if path is not None:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from None
        F = Filling.from_json(text) if text.lstrip().startswith("{") else Filling.from_text(text)
    elif tokens:
        joined = " ".join(tokens).strip()
        if joined.startswith("{"):
            F = Filling.from_json(joined)
        else:
            lines = [part.strip().replace(",", " ") for tok in tokens for part in tok.split("/")]
            F = Filling.from_text("\n".join(line or "-" for line in lines))
    else:
        raise UsageError("no filling given; use --file PATH or list rows after --")
    if shape is not None and F.shape != shape:
        F = Filling.from_rows(F.rows, shape)
    return F


def _print_report(report: VerificationReport, out: TextIO) -> None:
    for c in report.checks:
        line = f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
        if c.note:
            line += f"  ({c.note})"
        out.write(line + "\n")
        if not c.passed and c.witness is not None:
            out.write(f"      witness: {json.dumps(c.witness)}\n")


def cmd_enumerate(args, out: TextIO) -> int:
    fillings = enumerate_ssf(args.alpha)
    if args.json:
        json.dump(
            {"alpha": list(args.alpha.parts), "fillings": [F.to_json() for F in fillings], "count": len(fillings)},
            out,
        )
        out.write("\n")
        return 0
    for F in fillings:
        out.write(F.to_text() + "\n\n")
    out.write(f"count: {len(fillings)}\n")
    return 0


def cmd_key(args, out: TextIO) -> int:
    polys = {}
    if args.method in ("recursive", "both"):
        polys["recursive"] = key_recursive(args.alpha)
    if args.method in ("combinatorial", "both"):
        polys["combinatorial"] = key_combinatorial(args.alpha)
    equal = len(set(polys.values())) == 1
    if args.json:
        obj: dict = {"alpha": list(args.alpha.parts)}
        obj.update({k: str(p) for k, p in polys.items()})
        if args.method == "both":
            obj["equal"] = equal
        json.dump(obj, out)
        out.write("\n")
    else:
        for p in polys.values():
            out.write(f"{p}\n")
        if args.method == "both":
            out.write("EQUAL\n" if equal else "DIFFER\n")
    return 0 if equal else 1


def cmd_involution(args, out: TextIO) -> int:
    F = parse_filling(args.rows, args.file, args.alpha)
    F.require_ssf()
    if args.t is None:
        G = phi_row(F, args.r)
        steps = [F, G]
        counts = None
        marks_t = args.r
    else:
        steps = list(phi_steps(F, args.r, args.t))
        G = steps[-1]
        counts = free_counts(F, args.r, args.t)
        marks_t = args.t
    if args.json:
        obj = {"input": F.to_json(), "r": args.r, "t": args.t, "output": G.to_json()}
        if counts is not None:
            obj["n1"], obj["n2"] = counts
        if args.trace:
            obj["steps"] = [S.to_json() for S in steps]
        json.dump(obj, out)
        out.write("\n")
    elif args.trace:
        out.write("\n\n".join(annotate(S, marks_t) for S in steps) + "\n")
    else:
        out.write(G.to_text() + "\n")
    return 0


def cmd_derive(args, out: TextIO) -> int:
    Fp = parse_filling(args.rows, args.file, None)
    fam = derived_fillings(Fp, args.alpha)
    if args.json:
        json.dump(fam.to_json(), out)
        out.write("\n")
        return 0
    out.write(f"r: {fam.r}\nm: {fam.m}\n")
    for k, F in enumerate(fam.members):
        out.write(f"\nF_{k}:\n{F.to_text()}\n")
    return 0


def cmd_verify(args, out: TextIO) -> int:
    comps = family(args.max_n, args.max_part)
    reports = sweep(comps, jobs=args.jobs)
    failures = [r for r in reports if not r.ok]
    if args.json:
        payload = [r.to_json() for r in reports]
        if args.no_timing:
            for p in payload:
                p["elapsed_ms"] = 0
        json.dump({"reports": payload, "compositions": len(reports), "failures": len(failures)}, out)
        out.write("\n")
        return 1 if failures else 0
    header = f"{'alpha':<12} {'|SSF|':>6} {'checks':>8}"
    if not args.no_timing:
        header += f" {'ms':>7}"
    out.write(header + "\n")
    total_ms = 0
    for rep in reports:
        n_ok = sum(c.passed for c in rep.checks)
        line = f"{str(rep.alpha):<12} {len(enumerate_ssf(rep.alpha)):>6} {f'{n_ok}/{len(rep.checks)}':>8}"
        if not args.no_timing:
            line += f" {rep.elapsed_ms:>7}"
        if not rep.ok:
            line += "  FAIL " + ",".join(c.name for c in rep.failures())
        out.write(line + "\n")
        total_ms += rep.elapsed_ms
    out.write(f"compositions: {len(reports)}  failures: {len(failures)}\n")
    if not args.no_timing:
        out.write(f"total_ms: {total_ms}\n")
    return 1 if failures else 0


def cmd_bender_knuth(args, out: TextIO) -> int:
    report = bender_knuth_check(args.alpha, args.r, args.t)
    if args.json:
        out.write(report.dumps() + "\n")
    else:
        out.write(f"alpha: {args.alpha}  |SSF|: {len(enumerate_ssf(args.alpha))}\n")
        _print_report(report, out)
    return 0 if report.ok else 1


def _composition(text: str) -> Composition:
    try:
        return Composition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skyfill", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[common], help="list SSF(alpha)")
    s.add_argument("alpha", type=_composition)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("key", parents=[common], help="key polynomial of alpha")
    s.add_argument("alpha", type=_composition)
    s.add_argument("--method", choices=("recursive", "combinatorial", "both"), default="both")
    s.set_defaults(func=cmd_key)

    s = sub.add_parser("involution", parents=[common], help="apply phi(., r, t), or phi_row without --t")
    s.add_argument("alpha", type=_composition)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--t", type=int)
    s.add_argument("--trace", action="store_true", help="print every intermediate filling")
    s.add_argument("--file")
    s.add_argument("rows", nargs="*")
    s.set_defaults(func=cmd_involution)

    s = sub.add_parser("derive", parents=[common], help="derived fillings of a filling of shape alpha'")
    s.add_argument("alpha", type=_composition)
    s.add_argument("--file")
    s.add_argument("rows", nargs="*")
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("verify", parents=[common], help="exhaustive sweep over small compositions")
    s.add_argument("--max-n", type=int, default=4)
    s.add_argument("--max-part", type=int, default=3)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-timing", action="store_true", help="omit timings for byte-stable output")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bender-knuth", parents=[common], help="Bender-Knuth specialization report")
    s.add_argument("alpha", type=_composition)
    s.add_argument("--r", type=int)
    s.add_argument("--t", type=int)
    s.set_defaults(func=cmd_bender_knuth)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    inline: list[str] = []
    if "--" in argv:
        k = argv.index("--")
        argv, inline = argv[:k], argv[k + 1 :]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if inline:
        if not hasattr(args, "rows"):
            err.write(f"skyfill {args.command}: takes no inline filling\n")
            return 2
        args.rows = list(args.rows) + inline
    try:
        return args.func(args, out)
    except (UsageError, StructureError, InvalidFillingError, ParameterError, ValueError) as exc:
        err.write(f"skyfill {args.command}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
