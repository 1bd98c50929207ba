"""Command-line front end.

Exit codes: 0 success, 1 parse error, 2 invalid structure, 3 failed
mathematical check.  All output is deterministic for fixed inputs, and
``--json`` reports carry the same data as the human-readable ones.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bott, formats, gen, gradient, homology, inequalities, morse
from .cw import Complex
from .errors import CheckError, DmbError, ParseError, StructureError
from .functions import CellFunction
from .homology import IntPolynomial


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_complex(path: str) -> Complex:
    return formats.parse_complex(_read(path))


def _load_function(path: str, complex: Complex) -> CellFunction:
    return formats.parse_function(_read(path), complex)


def _frac(value: Fraction) -> str:
    return str(value)


def _poly_json(p: IntPolynomial) -> dict:
    return {"coeffs": list(p.coeffs), "text": str(p)}


def _violations_json(violations) -> list[dict]:
    return [
        {"cell": v.cell, "condition": v.condition, "witnesses": list(v.witnesses)}
        for v in violations
    ]


def _print_violations(violations) -> None:
    for v in violations:
        print(f"violation {v.condition} at {v.cell}: {','.join(v.witnesses)}")


def _emit(report: dict, as_json: bool, human) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        human(report)


def _cells_line(complex: Complex) -> list[int]:
    return [len(complex.cells_of_dim(k)) for k in range(complex.max_dim + 1)]


def cmd_validate(args: argparse.Namespace) -> int:
    complex = _load_complex(args.complex)
    counts = " ".join(str(n) for n in _cells_line(complex))
    print(f"complex OK: {len(complex)} cells, per dimension {counts}")
    if args.function:
        _load_function(args.function, complex)
        print(f"function OK: total on {len(complex)} cells")
    return 0


def cmd_morse_check(args: argparse.Namespace) -> int:
    complex = _load_complex(args.complex)
    f = _load_function(args.function, complex)
    verdict = morse.check_morse(complex, f)
    report = {"is_morse": verdict.is_morse, "violations": _violations_json(verdict.violations)}

    def human(rep: dict) -> None:
        print("MORSE" if rep["is_morse"] else "NOT MORSE")
        _print_violations(verdict.violations)

    _emit(report, args.json, human)
    return 0 if verdict.is_morse else 3


def cmd_mb_check(args: argparse.Namespace) -> int:
    complex = _load_complex(args.complex)
    f = _load_function(args.function, complex)
    verdict = bott.check_morse_bott(complex, f)
    report = {
        "is_morse_bott": verdict.is_morse_bott,
        "violations": _violations_json(verdict.violations),
    }

    def human(rep: dict) -> None:
        print("MORSE-BOTT" if rep["is_morse_bott"] else "NOT MORSE-BOTT")
        _print_violations(verdict.violations)

    _emit(report, args.json, human)
    return 0 if verdict.is_morse_bott else 3


def _collection_json(complex: Complex, f: CellFunction, col: bott.Collection) -> dict:
    entry = {
        "value": _frac(col.value),
        "cells": sorted(col.cells),
        "reduced": sorted(col.reduced) if col.reduced is not None else None,
        "removed_up": sorted(col.removed_up) if col.removed_up is not None else None,
        "removed_down": sorted(col.removed_down) if col.removed_down is not None else None,
    }
    if col.reduced is not None:
        entry["poincare"] = _poly_json(
            homology.poincare(homology.reduced_chain_complex(complex, f, col))
        )
    return entry


def _collection_line(entry: dict) -> str:
    def csv(values) -> str:
        return ",".join(values) if values else "-"

    return (
        f"collection value={entry['value']} cells={csv(entry['cells'])} "
        f"reduced={csv(entry['reduced'])} removed_up={csv(entry['removed_up'])} "
        f"removed_down={csv(entry['removed_down'])}"
    )


def cmd_collections(args: argparse.Namespace) -> int:
    complex = _load_complex(args.complex)
    f = _load_function(args.function, complex)
    cols = bott.reduce_all(complex, f)
    report = {"collections": [_collection_json(complex, f, col) for col in cols]}

    def human(rep: dict) -> None:
        for entry in rep["collections"]:
            print(_collection_line(entry))

    _emit(report, args.json, human)
    return 0


def _betti_report(complex: Complex) -> dict:
    cc = homology.chain_complex(complex)
    profile = homology.rank_profile(cc)
    poly = homology.poincare(cc)
    return {
        "ranks": [
            {
                "dim": k,
                "cells": profile.cells[k],
                "cycles": profile.cycles[k],
                "boundaries": profile.boundaries[k],
                "betti": profile.betti[k],
                "torsion": list(profile.torsion[k]),
            }
            for k in range(cc.max_dim + 1)
        ],
        "poincare": _poly_json(poly),
    }


def cmd_betti(args: argparse.Namespace) -> int:
    complex = _load_complex(args.complex)
    report = _betti_report(complex)

    def human(rep: dict) -> None:
        print("dim cells cycles boundaries betti torsion")
        for row in rep["ranks"]:
            torsion = ",".join(str(t) for t in row["torsion"]) or "-"
            print(
                f"{row['dim']:<3} {row['cells']:<5} {row['cycles']:<6} "
                f"{row['boundaries']:<10} {row['betti']:<5} {torsion}"
            )
        print(f"P_t = {rep['poincare']['text']}")

    _emit(report, args.json, human)
    return 0


def cmd_gradient(args: argparse.Namespace) -> int:
    complex = _load_complex(args.complex)
    f = _load_function(args.function, complex)
    field = (
        gradient.strict_gradient(complex, f)
        if args.strict
        else gradient.morse_gradient(complex, f)
    )
    sys.stdout.write(formats.dump_arrows(field))
    return 0


def cmd_synthesize(args: argparse.Namespace) -> int:
    complex = _load_complex(args.complex)
    field = formats.parse_arrows(_read(args.arrows))
    g = gradient.synthesize_morse(complex, field)
    sys.stdout.write(formats.dump_function(g))
    return 0


def _identity_json(report: inequalities.IdentityReport) -> dict:
    return {
        "lhs": _poly_json(report.lhs),
        "poincare": _poly_json(report.poincare),
        "residual": _poly_json(report.residual),
        "holds": report.holds,
        "nonnegative": report.nonnegative,
    }


def cmd_inequality(args: argparse.Namespace) -> int:
    complex = _load_complex(args.complex)
    f = _load_function(args.function, complex)
    if args.morse:
        report = inequalities.morse_identity(complex, f)
        kind = "morse"
    else:
        report = inequalities.morse_bott_identity(complex, f)
        kind = "morse-bott"
    payload = {"identity": kind, **_identity_json(report)}

    def human(rep: dict) -> None:
        print(f"identity: {rep['identity']}")
        print(f"lhs      = {rep['lhs']['text']}")
        print(f"P_t      = {rep['poincare']['text']}")
        print(f"residual = {rep['residual']['text']}")
        print(f"equality: {'HOLDS' if rep['holds'] else 'FAILS'}")
        print(f"nonnegative residual: {'YES' if rep['nonnegative'] else 'NO'}")

    _emit(payload, args.json, human)
    return 0 if report.holds and report.nonnegative else 3


def cmd_analyze(args: argparse.Namespace) -> int:
    complex = _load_complex(args.complex)
    f = _load_function(args.function, complex)
    verdict = bott.check_morse_bott(complex, f)
    report: dict = {
        "cells_per_dim": _cells_line(complex),
        "is_morse_bott": verdict.is_morse_bott,
        "violations": _violations_json(verdict.violations),
        "warnings": [],
    }
    failed = False
    if verdict.is_morse_bott:
        cols = bott.reduce_all(complex, f)
        entries = [_collection_json(complex, f, col) for col in cols]
        identity = inequalities.morse_bott_identity(complex, f)
        field = gradient.strict_gradient(complex, f)
        lhs = IntPolynomial([0])
        for entry in entries:
            lhs = lhs + IntPolynomial(entry["poincare"]["coeffs"])
        report.update(
            {
                "collections": entries,
                "reduced_poincare_sum": _poly_json(lhs),
                "poincare": _poly_json(identity.poincare),
                "residual": _poly_json(identity.residual),
                "identity_holds": identity.holds,
                "residual_nonnegative": identity.nonnegative,
                "gradient": [list(pair) for pair in field.pairs()],
            }
        )
    else:
        cols = bott.collections(complex, f)
        report["collections"] = [_collection_json(complex, f, col) for col in cols]
        failed = True

    if args.morse:
        morse_verdict = morse.check_morse(complex, f)
        morse_report: dict = {
            "is_morse": morse_verdict.is_morse,
            "violations": _violations_json(morse_verdict.violations),
        }
        if morse_verdict.is_morse:
            identity = inequalities.morse_identity(complex, f)
            morse_report.update(
                {
                    "critical_counts": morse.critical_counts(complex, f),
                    "lhs": _poly_json(identity.lhs),
                    "residual": _poly_json(identity.residual),
                    "identity_holds": identity.holds,
                }
            )
        else:
            failed = True
        report["morse"] = morse_report
    if not verdict.is_morse_bott:
        report["warnings"].append("function is not Morse-Bott; analysis is partial")

    def human(rep: dict) -> None:
        print("cells per dimension:", " ".join(str(n) for n in rep["cells_per_dim"]))
        print("mb-check:", "OK" if rep["is_morse_bott"] else "FAILED")
        _print_violations(verdict.violations)
        for entry in rep["collections"]:
            line = _collection_line(entry)
            if "poincare" in entry:
                line += f" P_t={entry['poincare']['text']}"
            print(line)
        if rep["is_morse_bott"]:
            print(f"sum of reduced P_t = {rep['reduced_poincare_sum']['text']}")
            print(f"P_t(complex) = {rep['poincare']['text']}")
            print(f"residual = {rep['residual']['text']}")
            verdict_word = "HOLDS" if rep["identity_holds"] else "FAILS"
            print(f"identity: {verdict_word}")
            print("gradient:", " ".join(f"{s}->{t}" for s, t in rep["gradient"]) or "-")
        if "morse" in rep:
            print("morse-check:", "OK" if rep["morse"]["is_morse"] else "FAILED")
            if rep["morse"]["is_morse"]:
                counts = " ".join(str(n) for n in rep["morse"]["critical_counts"])
                print(f"critical counts: {counts}")
                print(f"morse lhs = {rep['morse']['lhs']['text']}")
                print(f"morse residual = {rep['morse']['residual']['text']}")
                word = "HOLDS" if rep["morse"]["identity_holds"] else "FAILS"
                print(f"morse identity: {word}")
        for warning in rep["warnings"]:
            print(f"warning: {warning}")

    _emit(report, args.json, human)
    return 3 if failed else 0


def cmd_gen(args: argparse.Namespace) -> int:
    cfg = gen.GenConfig(seed=args.seed, max_dim=args.dim, max_cells=args.cells)
    complex = gen.random_simplicial(cfg)
    f = (
        gen.random_morse_bott(complex, cfg)
        if args.mb
        else gen.random_morse(complex, cfg)
    )
    complex_text = formats.dump_complex(complex)
    function_text = formats.dump_function(f)
    if args.out:
        Path(args.out + ".cw").write_text(complex_text, encoding="utf-8")
        Path(args.out + ".fn").write_text(function_text, encoding="utf-8")
        print(f"wrote {args.out}.cw and {args.out}.fn")
    else:
        sys.stdout.write(complex_text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmb",
        description="Discrete Morse-Bott analysis of combinatorial CW complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, *, complex_arg=True, function_arg=False, json_flag=False):
        p = sub.add_parser(name)
        if complex_arg:
            p.add_argument("complex", help="complex file")
        if function_arg:
            p.add_argument("function", help="function file")
        if json_flag:
            p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.set_defaults(handler=handler)
        return p

    p = add("validate", cmd_validate)
    p.add_argument("function", nargs="?", default=None, help="optional function file")

    add("morse-check", cmd_morse_check, function_arg=True, json_flag=True)
    add("mb-check", cmd_mb_check, function_arg=True, json_flag=True)
    add("collections", cmd_collections, function_arg=True, json_flag=True)
    add("betti", cmd_betti, json_flag=True)
    add("poincare", cmd_betti, json_flag=True)

    p = add("gradient", cmd_gradient, function_arg=True)
    p.add_argument("--strict", action="store_true", help="strict-drop gradient of a Morse-Bott function")

    p = add("synthesize", cmd_synthesize)
    p.add_argument("arrows", help="arrow file")

    p = add("analyze", cmd_analyze, function_arg=True, json_flag=True)
    p.add_argument("--morse", action="store_true", help="also run the Morse checks and identity")

    p = add("inequality", cmd_inequality, function_arg=True, json_flag=True)
    p.add_argument("--morse", action="store_true", help="check the Morse identity instead")

    p = add("gen", cmd_gen, complex_arg=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cells", type=int, default=30, help="cell budget")
    p.add_argument("--dim", type=int, default=2, help="maximum simplex dimension")
    p.add_argument("--mb", action="store_true", help="generate a Morse-Bott function")
    p.add_argument("--out", default=None, help="write <out>.cw and <out>.fn")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: parse: {exc}", file=sys.stderr)
        return 1
    except StructureError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except CheckError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except DmbError as exc:  # pragma: no cover - safety net
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
