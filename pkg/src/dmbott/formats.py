"""Line-oriented text formats for complexes, functions, and matchings.

One record per line, ``#`` starts a comment, UTF-8.  Complex files use
either explicit mode (``cell``/``cover``/``irr`` records) or simplicial
mode (``simplex`` records); mixing the two is an error.  Parsing is
strict: unknown keywords and wrong arities fail.

    cell <id> <dim>
    cover <face-id> <cell-id> <incidence:int> <reg|irr>
    irr <face-id> <cell-id>        # deep irregular pair, gap >= 2
    simplex <v1> <v2> ... <vk>
    value <cell-id> <rational>     # rational: p, p/q, or decimal
    arrow <face-id> <cell-id>
"""

from __future__ import annotations

from fractions import Fraction

from .cw import Cell, Complex, CoveringPair, from_simplicial
from .errors import ParseError
from .functions import CellFunction, as_fraction
from .gradient import VectorField


def _records(text: str) -> list[tuple[int, list[str]]]:
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            records.append((lineno, line.split()))
    return records


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"bad {what} {token!r}", lineno) from None


def parse_complex(text: str) -> Complex:
    cells: list[Cell] = []
    coverings: list[CoveringPair] = []
    deep: list[tuple[str, str]] = []
    simplices: list[set[str]] = []
    for lineno, tokens in _records(text):
        keyword, args = tokens[0], tokens[1:]
        if keyword == "cell":
            if len(args) != 2:
                raise ParseError("cell takes <id> <dim>", lineno)
            cells.append(Cell(args[0], _int(args[1], lineno, "dimension")))
        elif keyword == "cover":
            if len(args) != 4:
                raise ParseError("cover takes <face> <cell> <incidence> <reg|irr>", lineno)
            if args[3] not in ("reg", "irr"):
                raise ParseError(f"regularity must be 'reg' or 'irr', got {args[3]!r}", lineno)
            coverings.append(
                CoveringPair(args[0], args[1], _int(args[2], lineno, "incidence"), args[3] == "reg")
            )
        elif keyword == "irr":
            if len(args) != 2:
                raise ParseError("irr takes <face> <cell>", lineno)
            deep.append((args[0], args[1]))
        elif keyword == "simplex":
            if not args:
                raise ParseError("simplex needs at least one vertex", lineno)
            simplices.append(set(args))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    explicit = bool(cells or coverings or deep)
    if explicit and simplices:
        raise ParseError("cannot mix simplex records with cell/cover/irr records")
    if simplices:
        return from_simplicial(simplices)
    if not explicit:
        raise ParseError("no records found")
    return Complex(cells, coverings, deep)


def dump_complex(complex: Complex) -> str:
    lines = [f"cell {c.id} {c.dim}" for c in complex.cells]
    for pair in complex.covering_pairs():
        flag = "reg" if pair.regular else "irr"
        lines.append(f"cover {pair.face} {pair.cell} {pair.incidence} {flag}")
    for low, high in complex.deep_irregular_pairs():
        lines.append(f"irr {low} {high}")
    return "\n".join(lines) + "\n"


def _fraction_token(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_function(text: str, complex: Complex) -> CellFunction:
    values: dict[str, Fraction] = {}
    for lineno, tokens in _records(text):
        keyword, args = tokens[0], tokens[1:]
        if keyword != "value":
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
        if len(args) != 2:
            raise ParseError("value takes <cell-id> <rational>", lineno)
        if args[0] in values:
            raise ParseError(f"value for {args[0]!r} given twice", lineno)
        try:
            values[args[0]] = as_fraction(args[1])
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return CellFunction(complex, values)


def dump_function(f: CellFunction) -> str:
    lines = [f"value {cid} {_fraction_token(v)}" for cid, v in f.items()]
    return "\n".join(lines) + "\n"


def parse_arrows(text: str) -> VectorField:
    matching: dict[str, str] = {}
    for lineno, tokens in _records(text):
        keyword, args = tokens[0], tokens[1:]
        if keyword != "arrow":
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
        if len(args) != 2:
            raise ParseError("arrow takes <face-id> <cell-id>", lineno)
        if args[0] in matching:
            raise ParseError(f"cell {args[0]!r} matched twice", lineno)
        matching[args[0]] = args[1]
    return VectorField(matching)


def dump_arrows(field: VectorField) -> str:
    lines = [f"arrow {sigma} {tau}" for sigma, tau in field.pairs()]
    return "\n".join(lines) + ("\n" if lines else "")
